#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpcool/config.hpp"
#include "cpcool/kernels.hpp"

namespace cpcool {

struct SweepCell {
  std::vector<double> coords;  // display units, one per axis
  double m_ss = 0.0;
  double n_total_ss = 0.0;
  double gamma_eff = 0.0;
  bool stable = false;  // gamma_eff > 0
  std::string diagnostic;  // non-empty when the cell could not be evaluated
};

struct SweepResult {
  std::vector<SweepAxis> axes;
  std::vector<std::vector<double>> grids;
  std::vector<SweepCell> cells;  // row-major, last axis fastest
};

struct SweepOptions {
  unsigned threads = 0;           // 0: hardware concurrency
  std::size_t chunk = 256;        // cells per scheduling unit
  std::optional<std::uint64_t> shuffle_seed{};  // permute chunk order (testing)
  std::optional<kernels::Backend> backend{};     // default: kernels::active_backend()
};

/// Grid values of an axis in display units. Endpoints are exact.
std::vector<double> axis_grid(const SweepAxis& axis);

/// Closed-form stationary state and cooling rate at every grid point.
SweepResult run_sweep(const RunConfig& config, const SweepOptions& opts = {});

struct EvolveColumn {
  double temperature = 0.0;  // K
  double m0 = 0.0;
  std::vector<double> m;    // integrated moment system
  std::vector<double> fit;  // a e^{-gamma_eff t} + m_ss
  bool divergent = false;
};

struct EvolveResult {
  std::vector<double> times;  // 0 followed by a log-spaced grid
  std::vector<EvolveColumn> columns;
  double gamma_eff = 0.0;
  double m_ss = 0.0;
};

std::vector<double> evolve_grid(const EvolveSettings& settings);

/// m(t) for each starting temperature in config.evolve.
EvolveResult run_evolve(const RunConfig& config);

}  // namespace cpcool
