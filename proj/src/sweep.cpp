#include "cpcool/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "cpcool/error.hpp"
#include "cpcool/moment_dynamics.hpp"

namespace cpcool {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> spaced(double lo, double hi, int count, bool log_spaced) {
  std::vector<double> v;
  if (count <= 0) return v;
  v.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    v.push_back(lo);
    return v;
  }
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / (count - 1);
    if (i == count - 1) {
      v.push_back(hi);
    } else if (log_spaced) {
      v.push_back(lo * std::pow(hi / lo, f));
    } else {
      v.push_back(lo + (hi - lo) * f);
    }
  }
  return v;
}

struct Workspace {
  std::vector<double> omega, nu, g, gamma, alpha_sq;
  std::vector<double> m_ss, n_ss, gamma_eff, lambda3, mu3;
  std::vector<std::string> diagnostic;

  explicit Workspace(std::size_t n)
      : omega(n), nu(n), g(n), gamma(n), alpha_sq(n), m_ss(n), n_ss(n), gamma_eff(n), lambda3(n),
        mu3(n), diagnostic(n) {}
};

}  // namespace

std::vector<double> axis_grid(const SweepAxis& axis) {
  return spaced(axis.min, axis.max, axis.count, axis.log_spaced);
}

SweepResult run_sweep(const RunConfig& config, const SweepOptions& opts) {
  SweepResult result;
  result.axes = config.sweep;
  std::size_t total = result.axes.empty() ? 0 : 1;
  for (const auto& axis : result.axes) {
    result.grids.push_back(axis_grid(axis));
    total *= result.grids.back().size();
  }
  if (total == 0) return result;

  const kernels::Backend backend = opts.backend.value_or(kernels::active_backend());
  const std::size_t chunk = std::max<std::size_t>(1, opts.chunk);
  const std::size_t n_chunks = (total + chunk - 1) / chunk;
  std::vector<std::size_t> order(n_chunks);
  std::iota(order.begin(), order.end(), 0);
  if (opts.shuffle_seed) std::shuffle(order.begin(), order.end(), std::mt19937_64(*opts.shuffle_seed));

  Workspace ws(total);
  const std::size_t naxes = result.axes.size();

  // Grid coordinates of flat index i, last axis fastest.
  auto coords_of = [&](std::size_t i) {
    std::vector<double> c(naxes);
    for (std::size_t a = naxes; a-- > 0;) {
      const std::size_t len = result.grids[a].size();
      c[a] = result.grids[a][i % len];
      i /= len;
    }
    return c;
  };

  auto run_chunk = [&](RunConfig& local, std::size_t c) {
    const std::size_t begin = c * chunk;
    const std::size_t end = std::min(total, begin + chunk);
    for (std::size_t i = begin; i < end; ++i) {
      const auto coords = coords_of(i);
      try {
        for (std::size_t a = 0; a < naxes; ++a)
          set_sweep_parameter(local, result.axes[a].parameter, coords[a]);
        const EffectiveParams p = resolved_params(local);
        ws.omega[i] = p.omega;
        ws.nu[i] = p.nu;
        ws.g[i] = p.g_coupling;
        ws.gamma[i] = p.gamma_cool;
        ws.alpha_sq[i] = p.alpha_sq();
      } catch (const std::exception& e) {
        ws.diagnostic[i] = e.what();
        ws.omega[i] = ws.nu[i] = ws.g[i] = ws.gamma[i] = ws.alpha_sq[i] = kNaN;
      }
    }
    const std::size_t n = end - begin;
    const kernels::ClosedFormBatchIn in{
        {ws.omega.data() + begin, n}, {ws.nu.data() + begin, n},       {ws.g.data() + begin, n},
        {ws.gamma.data() + begin, n}, {ws.alpha_sq.data() + begin, n},
    };
    const kernels::ClosedFormBatchOut out{
        {ws.m_ss.data() + begin, n},    {ws.n_ss.data() + begin, n}, {ws.gamma_eff.data() + begin, n},
        {ws.lambda3.data() + begin, n}, {ws.mu3.data() + begin, n},
    };
    kernels::closed_form_batch(backend, in, out);
  };

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_chunks));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    RunConfig local = config;
    for (std::size_t k; (k = next.fetch_add(1)) < n_chunks;) run_chunk(local, order[k]);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  result.cells.resize(total);
  for (std::size_t i = 0; i < total; ++i) {
    SweepCell& cell = result.cells[i];
    cell.coords = coords_of(i);
    cell.diagnostic = std::move(ws.diagnostic[i]);
    const bool singular = ws.g[i] == 0.0 || ws.nu[i] == 0.0 || ws.omega[i] == 0.0 ||
                          ws.lambda3[i] == 0.0 || ws.mu3[i] == 0.0;
    if (cell.diagnostic.empty() && singular) cell.diagnostic = "singular parameters";
    if (cell.diagnostic.empty() && !(std::isfinite(ws.m_ss[i]) && std::isfinite(ws.n_ss[i]) &&
                                     std::isfinite(ws.gamma_eff[i])))
      cell.diagnostic = "non-finite closed-form value";
    if (!cell.diagnostic.empty()) {
      cell.m_ss = cell.n_total_ss = cell.gamma_eff = kNaN;
      cell.stable = false;
      continue;
    }
    cell.m_ss = ws.m_ss[i];
    cell.n_total_ss = ws.alpha_sq[i] + ws.n_ss[i];
    cell.gamma_eff = ws.gamma_eff[i];
    cell.stable = cell.gamma_eff > 0.0;
  }
  return result;
}

std::vector<double> evolve_grid(const EvolveSettings& s) {
  std::vector<double> t{0.0};
  const auto tail = s.points == 1 ? std::vector<double>{s.t_max} : spaced(s.t_min, s.t_max, s.points, true);
  t.insert(t.end(), tail.begin(), tail.end());
  return t;
}

EvolveResult run_evolve(const RunConfig& config) {
  const EffectiveParams params = resolved_params(config);
  const MomentSystem system = build_system(params);

  EvolveResult result;
  result.times = evolve_grid(config.evolve);
  for (double T : config.evolve.temperatures) {
    if (T < 0.0) throw DomainError("run_evolve: negative temperature");
    EvolveColumn col;
    col.temperature = T;
    col.m0 = occupation_from_temperature(params.nu, T);
    const CoolingFit fit = cooling_rate(params, col.m0);
    result.gamma_eff = fit.gamma_eff;
    result.m_ss = fit.m_ss;

    const Trajectory traj = evolve(system, MomentState::from_occupations(0.0, col.m0), result.times);
    col.divergent = traj.divergent;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      col.m.push_back(traj.m(i));
      col.fit.push_back(fit.at(traj.times[i]));
    }
    result.columns.push_back(std::move(col));
  }
  return result;
}

}  // namespace cpcool
