// Command-line front end: single-point reports, parameter sweeps and decay
// traces, all written as CSV.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cpcool/casimir_polder.hpp"
#include "cpcool/config.hpp"
#include "cpcool/constants.hpp"
#include "cpcool/csv.hpp"
#include "cpcool/error.hpp"
#include "cpcool/moment_dynamics.hpp"
#include "cpcool/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSingular = 3;

constexpr const char* kSchemas = R"(CSV schemas:
  cp      z_um,potential_j,potential_hz,c4_hz_um4[,matsubara_j]
  params  quantity,value,unit
  steady  quantity,value
  rate    quantity,value
  sweep   <axis columns>,m_ss,n_total_ss,gamma_eff_per_s,stable
          axis columns: delta_hz, omega_rabi_hz, g_hz, omega_ph_hz, nu_hz, gamma_hz, eta
  evolve  t_s,m_T<T>K...,fit_T<T>K...   (m column suffixed _divergent when unstable)
Frequencies in reports are angular (rad/s) unless the column name ends in _hz.
Exit codes: 0 ok, 2 configuration error, 3 singular parameters.)";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cpcool::ConfigError("cannot read config file '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const cpcool::CsvTable& table, const cpcool::RunConfig& cfg) {
  if (cfg.output_path.empty() || cfg.output_path == "-") {
    cpcool::write_csv(table, std::cout);
    return;
  }
  cpcool::write_csv(table, cfg.output_path);
  // Sidecar recording the data version and every value that departs from the defaults.
  std::ofstream meta(cfg.output_path + ".meta", std::ios::binary | std::ios::trunc);
  meta << "data_version = " << cpcool::kDataVersion << "\n";
  for (const auto& [key, value] : cfg.explicit_keys) meta << "override " << key << " = " << value << "\n";
}

void row(cpcool::CsvTable& t, const std::string& name, double v) {
  t.rows.push_back({name, cpcool::format_double(v)});
}

cpcool::CsvTable cmd_cp(const cpcool::RunConfig& cfg, double z_min_um, double z_max_um, int points,
                        double temperature) {
  cpcool::CsvTable t;
  t.header = {"z_um", "potential_j", "potential_hz", "c4_hz_um4"};
  const bool thermal = temperature >= 0.0;
  if (thermal) t.header.emplace_back("matsubara_j");
  cpcool::SweepAxis axis{"", z_min_um, z_max_um, points, true};
  cpcool::CpOptions opts;
  opts.rel_tol = cfg.quad_rel_tol;
  for (double z_um : cpcool::axis_grid(axis)) {
    const double z = z_um * 1e-6;
    const double u = cpcool::cp_potential_ground(cfg.atom, z, opts);
    const double u_hz = u / cpcool::planck_h();
    std::vector<std::string> r{cpcool::format_double(z_um), cpcool::format_double(u),
                               cpcool::format_double(u_hz),
                               cpcool::format_double(u_hz * std::pow(z_um, 4))};
    if (thermal)
      r.push_back(cpcool::format_double(cpcool::matsubara_potential(cfg.atom, z, temperature, opts)));
    t.rows.push_back(std::move(r));
  }
  return t;
}

cpcool::CsvTable cmd_params(const cpcool::RunConfig& cfg) {
  const auto mode = cpcool::resolved_mode(cfg);
  const auto p = cpcool::resolved_params(cfg);
  for (const auto& w : cpcool::validate_regime(cfg.atom, cfg.drive, mode, p))
    std::cerr << "warning: " << w.message << " (ratio " << w.ratio << ")\n";
  const auto r = cpcool::regime_ratios(cfg.atom, cfg.drive, mode, p);

  cpcool::CsvTable t;
  t.header = {"quantity", "value", "unit"};
  auto add = [&](const char* name, double v, const char* unit) {
    t.rows.push_back({name, cpcool::format_double(v), unit});
  };
  add("omega", p.omega, "rad/s");
  add("xi_drive", p.xi_drive, "rad/s");
  add("g", p.g_coupling, "rad/s");
  add("gamma", p.gamma_cool, "rad/s");
  add("nu", p.nu, "rad/s");
  add("omega_g_shift", p.omega_g_shift, "rad/s");
  add("alpha_re", p.alpha_amp.real(), "1");
  add("alpha_im", p.alpha_amp.imag(), "1");
  add("alpha_sq", p.alpha_sq(), "1");
  add("beta_re", p.beta_amp.real(), "1");
  add("beta_im", p.beta_amp.imag(), "1");
  add("q0", mode.q0, "1/m");
  add("mass", mode.mass_M, "kg");
  add("zero_point", mode.zero_point, "m");
  add("delta_over_rabi", r.delta_over_rabi, "1");
  add("delta_over_phonon", r.delta_over_phonon, "1");
  add("delta_over_nu", r.delta_over_nu, "1");
  add("delta_over_linewidth", r.delta_over_linewidth, "1");
  return t;
}

cpcool::CsvTable cmd_steady(const cpcool::RunConfig& cfg, bool linear) {
  const auto p = cpcool::resolved_params(cfg);
  const auto s = linear ? cpcool::steady_state_linear(cpcool::build_system(p)) : cpcool::steady_state_closed(p);
  cpcool::CsvTable t;
  t.header = {"quantity", "value"};
  row(t, "m_ss", s.m_ss);
  row(t, "n_ss", s.n_ss);
  row(t, "n_total_ss", s.n_total_ss);
  for (int i = 1; i <= 12; ++i) row(t, "k" + std::to_string(i), s.k_ss[i]);
  row(t, "lambda_cubed", s.lambda_cubed);
  row(t, "mu_cubed", s.mu_cubed);
  if (s.m_ss > 0.0) row(t, "t_graph_k", cpcool::temperature_from_occupation(p.nu, s.m_ss));
  if (s.n_total_ss > 0.0)
    row(t, "t_atoms_k", cpcool::temperature_from_occupation(cfg.drive.phonon_omega_ph, s.n_total_ss));
  t.rows.push_back({"unphysical", s.unphysical() ? "1" : "0"});
  if (s.unphysical()) std::cerr << "warning: negative stationary occupation (outside the stable region)\n";
  return t;
}

cpcool::CsvTable cmd_rate(const cpcool::RunConfig& cfg, double temperature, double m0_opt) {
  const auto p = cpcool::resolved_params(cfg);
  const double m0 = m0_opt >= 0.0 ? m0_opt : cpcool::occupation_from_temperature(p.nu, temperature);
  const auto fit = cpcool::cooling_rate(p, m0);
  const auto slow = cpcool::slow_eigenvalue(cpcool::build_system(p));
  cpcool::CsvTable t;
  t.header = {"quantity", "value"};
  row(t, "m0", m0);
  row(t, "amplitude_a", fit.amplitude_a);
  row(t, "gamma_eff_per_s", fit.gamma_eff);
  row(t, "tau_s", 1.0 / fit.gamma_eff);
  row(t, "m_ss", fit.m_ss);
  row(t, "slow_eigenvalue_re", slow.real());
  row(t, "slow_eigenvalue_im", slow.imag());
  t.rows.push_back({"stable", fit.stable() ? "1" : "0"});
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sympathetic cooling of a graphene membrane by Casimir-Polder coupled atoms"};
  app.footer(kSchemas);
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::vector<std::string> sets;
  bool show_config = false;
  std::string output;
  app.add_option("-c,--config", config_path, "Configuration file (key = value lines)")
      ->envname("CPCOOL_CONFIG");
  app.add_option("--set", sets, "Override a configuration key, e.g. --set 'detuning=40 MHz'")
      ->allow_extra_args(false);
  app.add_flag("--show-config", show_config, "Print the resolved configuration to stderr");
  app.add_option("-o,--output", output, "Output CSV path (default: standard output)");

  double z_min = 0.1, z_max = 20.0, cp_temperature = -1.0;
  int cp_points = 30;
  auto* cp = app.add_subcommand("cp", "Casimir-Polder potential versus distance");
  cp->add_option("--z-min", z_min, "Smallest distance in um")->capture_default_str();
  cp->add_option("--z-max", z_max, "Largest distance in um")->capture_default_str();
  cp->add_option("--points", cp_points, "Log-spaced distances")->capture_default_str();
  cp->add_option("--temperature", cp_temperature, "Also evaluate the Matsubara sum at this T (K)");

  auto* params = app.add_subcommand("params", "Resolved effective-model parameters");

  bool linear = false;
  auto* steady = app.add_subcommand("steady", "Stationary moments at one parameter point");
  steady->add_flag("--linear", linear, "Solve the moment system instead of using the closed forms");

  double rate_temperature = 300.0, rate_m0 = -1.0;
  auto* rate = app.add_subcommand("rate", "Adiabatic cooling rate and decay amplitude");
  rate->add_option("--temperature", rate_temperature, "Initial membrane temperature in K")
      ->capture_default_str();
  rate->add_option("--m0", rate_m0, "Initial flexural occupation (overrides --temperature)");

  auto* sweep = app.add_subcommand("sweep", "Stationary occupation and rate over a parameter grid");
  auto* evolve = app.add_subcommand("evolve", "Flexural occupation versus time for each starting temperature");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    cpcool::RunConfig cfg =
        config_path.empty() ? cpcool::parse_config("") : cpcool::parse_config(read_file(config_path));
    for (const auto& s : sets) cpcool::apply_override(cfg, s);
    if (!output.empty()) cfg.output_path = output;
    if (show_config) std::cerr << cpcool::dump_config(cfg);

    if (*cp) {
      const bool thermal = cp->count("--temperature") > 0;
      if (thermal && cp_temperature < 0.0) throw cpcool::ConfigError("--temperature must be non-negative", 0);
      emit(cmd_cp(cfg, z_min, z_max, cp_points, thermal ? cp_temperature : -1.0), cfg);
    } else if (*params) {
      emit(cmd_params(cfg), cfg);
    } else if (*steady) {
      emit(cmd_steady(cfg, linear), cfg);
    } else if (*rate) {
      emit(cmd_rate(cfg, rate_temperature, rate_m0), cfg);
    } else if (*sweep) {
      const auto result = cpcool::run_sweep(cfg);
      for (std::size_t i = 0; i < result.cells.size(); ++i)
        if (!result.cells[i].diagnostic.empty())
          std::cerr << "cell " << i << ": " << result.cells[i].diagnostic << "\n";
      emit(cpcool::sweep_table(result), cfg);
    } else if (*evolve) {
      const auto result = cpcool::run_evolve(cfg);
      for (const auto& col : result.columns)
        if (col.divergent)
          std::cerr << "warning: T = " << col.temperature << " K trajectory diverges (unstable moment system)\n";
      emit(cpcool::evolve_table(result), cfg);
    }
  } catch (const cpcool::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const cpcool::SingularError& e) {
    std::cerr << "singular: " << e.what() << "\n";
    return kExitSingular;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
