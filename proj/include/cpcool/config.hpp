#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpcool/casimir_polder.hpp"
#include "cpcool/constants.hpp"
#include "cpcool/effective_model.hpp"
#include "cpcool/membrane.hpp"

namespace cpcool {

enum class CouplingMode {
  Direct,   // g given as a number
  Formula,  // g = 2 q0 x_zpf n0 omega^|g>, omega^|g> from (c4, z_a)
};

/// One sweep axis. Frequencies are held as ordinary frequencies (Hz) so grid
/// values print exactly; they are multiplied by 2 pi when applied.
struct SweepAxis {
  std::string parameter;  // detuning, rabi, g, phonon, nu, linewidth, eta
  double min = 0.0;
  double max = 0.0;
  int count = 0;
  bool log_spaced = true;
};

struct EvolveSettings {
  std::vector<double> temperatures;  // K
  double t_min = 0.0;                // s, first nonzero grid point
  double t_max = 0.0;                // s
  int points = 0;                    // log-spaced points in [t_min, t_max]
};

struct RunConfig {
  AtomSpecies atom;
  GrapheneSheet sheet;
  DriveParams drive;
  /// Membrane frequency used by the dynamics; empty means "from the sheet".
  std::optional<double> nu_override;

  CouplingMode coupling_mode = CouplingMode::Direct;
  double g = 0.0;           // rad/s, direct mode
  double z_a = 0.0;         // m
  double n0_per_um2 = 0.0;  // formula mode
  double c4 = 0.0;          // Hz um^4
  bool omega_g_shift = false;

  std::vector<SweepAxis> sweep;
  EvolveSettings evolve;
  std::string output_path;  // empty: standard output

  double quad_rel_tol = 1e-8;
  double integrator_rel_tol = 1e-10;

  /// Keys set explicitly (by file or override) and their raw text.
  std::map<std::string, std::string> explicit_keys;
};

/// Red-point operating parameters, Rb-87, default sheet, detuning x Rabi sweep.
RunConfig default_config();

/// Parses `key = value` lines with optional [section] headers on top of
/// default_config(). Throws ConfigError with the offending line.
RunConfig parse_config(std::string_view text);

/// Applies one `key=value` assignment (command-line override).
void apply_override(RunConfig& config, std::string_view assignment);

/// Re-validates cross-key constraints; called by parse_config and after overrides.
void validate(const RunConfig& config);

/// Fully resolved configuration as parseable text (angular frequencies in rad/s).
std::string dump_config(const RunConfig& config);

/// Names accepted by SweepAxis::parameter.
const std::vector<std::string>& sweep_parameters();

/// CSV column name for a sweep parameter, e.g. detuning -> delta_hz.
std::string sweep_column(const std::string& parameter);

/// Sets a sweep parameter from its display value (Hz or dimensionless).
void set_sweep_parameter(RunConfig& config, const std::string& parameter, double display_value);

MembraneMode resolved_mode(const RunConfig& config);
CouplingInput resolved_coupling(const RunConfig& config);
EffectiveParams resolved_params(const RunConfig& config);

}  // namespace cpcool
