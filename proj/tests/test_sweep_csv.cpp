#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cpcool/config.hpp"
#include "cpcool/csv.hpp"
#include "cpcool/moment_dynamics.hpp"
#include "cpcool/sweep.hpp"

using namespace cpcool;

namespace {

std::string to_text(const CsvTable& t) {
  std::ostringstream os;
  write_csv(t, os);
  return os.str();
}

RunConfig small_grid() {
  return parse_config("sweep_x = detuning, 3.6 MHz, 360 MHz, 21, log\nsweep_y = rabi, 1 MHz, 100 MHz, 13, log\n");
}

}  // namespace

TEST_CASE("axis grids") {
  const auto g = axis_grid(SweepAxis{"detuning", 3.6e6, 3.6e8, 41, true});
  REQUIRE(g.size() == 41);
  CHECK(g.front() == 3.6e6);
  CHECK(g.back() == 3.6e8);
  CHECK(g[20] == 3.6e7);
  const auto l = axis_grid(SweepAxis{"eta", 0.1, 0.5, 5, false});
  CHECK(l[2] == doctest::Approx(0.3));
  CHECK(axis_grid(SweepAxis{"eta", 0.1, 0.5, 1, false}) == std::vector<double>{0.1});
  CHECK(axis_grid(SweepAxis{"eta", 0.1, 0.5, 0, false}).empty());
}

TEST_CASE("default sweep contains the red point") {
  const RunConfig c = parse_config("");
  const SweepResult r = run_sweep(c);
  CHECK(r.cells.size() == 41 * 41);
  const auto p = resolved_params(c);
  const auto s = steady_state_closed(p);
  const auto fit = cooling_rate(p, 0.0);
  bool found = false;
  for (const auto& cell : r.cells) {
    if (cell.coords[0] == 3.6e7 && cell.coords[1] == 1e7) {
      found = true;
      CHECK(cell.m_ss == s.m_ss);
      CHECK(cell.n_total_ss == s.n_total_ss);
      CHECK(cell.gamma_eff == fit.gamma_eff);
      CHECK(cell.stable);
    }
  }
  CHECK(found);
  for (const auto& cell : r.cells) CHECK(cell.stable == (cell.gamma_eff > 0.0));
}

TEST_CASE("1x1 sweep equals the single-point result") {
  const RunConfig c = parse_config("sweep_x = detuning, 36 MHz, 36 MHz, 1\nsweep_y = rabi, 10 MHz, 10 MHz, 1\n");
  const SweepResult r = run_sweep(c);
  REQUIRE(r.cells.size() == 1);
  const auto s = steady_state_closed(resolved_params(parse_config("")));
  CHECK(r.cells[0].m_ss == s.m_ss);
  CHECK(r.cells[0].n_total_ss == s.n_total_ss);
}

TEST_CASE("sweep is independent of scheduling and backend") {
  const RunConfig c = small_grid();
  const std::string ref = to_text(sweep_table(run_sweep(c, SweepOptions{.threads = 1, .chunk = 1000})));
  for (unsigned threads : {2u, 3u, 8u}) {
    for (std::uint64_t seed : {1u, 99u}) {
      SweepOptions o{.threads = threads, .chunk = 7, .shuffle_seed = seed};
      CHECK(to_text(sweep_table(run_sweep(c, o))) == ref);
    }
  }
  SweepOptions scalar{.backend = kernels::Backend::Scalar};
  CHECK(to_text(sweep_table(run_sweep(c, scalar))) == ref);
}

TEST_CASE("singular cells carry diagnostics") {
  const RunConfig c = parse_config("sweep_x = g, 0 kHz, 10 kHz, 3, linear\nsweep_y = none\n");
  const SweepResult r = run_sweep(c);
  REQUIRE(r.cells.size() == 3);
  CHECK_FALSE(r.cells[0].diagnostic.empty());
  CHECK(std::isnan(r.cells[0].m_ss));
  CHECK_FALSE(r.cells[0].stable);
  CHECK(r.cells[1].diagnostic.empty());
  const RunConfig bad = parse_config("sweep_x = eta, 0.5, 1.5, 3, linear\nsweep_y = none\n");
  const SweepResult rb = run_sweep(bad);
  CHECK(rb.cells[0].diagnostic.empty());
  CHECK_FALSE(rb.cells[1].diagnostic.empty());
}

TEST_CASE("CSV schema and formatting") {
  const RunConfig c = small_grid();
  const CsvTable t = sweep_table(run_sweep(c));
  const std::string text = to_text(t);
  CHECK(text.rfind("delta_hz,omega_rabi_hz,m_ss,n_total_ss,gamma_eff_per_s,stable\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(t.rows.size() == 21 * 13);

  // Full round-trip precision.
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 18.729997624006646}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(std::nan("")) == "nan");

  CsvTable q{{"a", "b"}, {{"x,y", "say \"hi\""}}};
  CHECK(to_text(q) == "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
}

TEST_CASE("empty sweep writes only the header") {
  const RunConfig c = parse_config("sweep_x = none");
  const SweepResult r = run_sweep(c);
  CHECK(r.cells.empty());
  CHECK(to_text(sweep_table(r)) == "m_ss,n_total_ss,gamma_eff_per_s,stable\n");
  const RunConfig z = parse_config("sweep_x = detuning, 1 MHz, 2 MHz, 0\nsweep_y = rabi, 1 MHz, 2 MHz, 4\n");
  CHECK(to_text(sweep_table(run_sweep(z))) == "delta_hz,omega_rabi_hz,m_ss,n_total_ss,gamma_eff_per_s,stable\n");
}

TEST_CASE("identical runs write byte-identical files") {
  const RunConfig c = small_grid();
  const std::string a = "cpcool_test_a.csv", b = "cpcool_test_b.csv";
  write_csv(sweep_table(run_sweep(c)), a);
  write_csv(sweep_table(run_sweep(c)), b);
  std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK_FALSE(sa.str().empty());
  std::remove(a.c_str());
  std::remove(b.c_str());
  CHECK_THROWS_WITH_AS(write_csv(CsvTable{}, "/nonexistent-dir/x.csv"),
                       "cannot open '/nonexistent-dir/x.csv' for writing", std::runtime_error);
}

TEST_CASE("evolve table") {
  RunConfig c = parse_config("temperatures = 1 K, 300 K\npoints = 4\n");
  const EvolveResult r = run_evolve(c);
  REQUIRE(r.columns.size() == 2);
  CHECK(r.times.size() == 5);
  CHECK(r.times.front() == 0.0);
  CHECK(r.times.back() == 2.0);
  CHECK(r.columns[1].m[0] == r.columns[1].m0);
  CHECK(r.columns[1].fit[0] == doctest::Approx(r.columns[1].m0).epsilon(1e-9));
  const CsvTable t = evolve_table(r);
  CHECK(t.header.front() == "t_s");
  CHECK(t.header.size() == 5);
  // Red point: the moment system is unstable, columns are flagged.
  CHECK(t.header[1] == "m_T1K_divergent");
  CHECK(t.header[3] == "fit_T1K");
}
