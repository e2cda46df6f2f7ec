#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cpcool/constants.hpp"
#include "cpcool/membrane.hpp"

namespace cpcool {

struct DriveParams {
  double rabi_Omega;       // rad/s
  double detuning_Delta;   // omega_eg - omega_L, rad/s
  double lamb_dicke_eta;   // (0, 1)
  double phonon_omega_ph;  // rad/s
};

void validate(const DriveParams& drive);

/// How the atom-membrane coupling g is obtained.
struct CouplingInput {
  /// Fourier-domain CP frequency omega^|g> (rad/s), see cp_fourier_wq.
  double omega_g = 0.0;
  /// Areal atomic density in um^-2, only used by the formula path for g.
  double n0_per_um2 = 0.0;
  /// Direct value of g (rad/s). When set, the formula path is bypassed.
  std::optional<double> g_override;
  /// Add omega^|g> to the shifted phonon frequency.
  bool shift_omega = false;
};

/// Reduced parameters of the linearised atom-membrane model.
struct EffectiveParams {
  double omega;          // shifted phonon frequency, rad/s (may be negative)
  double xi_drive;       // rad/s
  double g_coupling;     // rad/s
  double gamma_cool;     // rad/s, > 0
  double nu;             // membrane frequency, rad/s
  std::complex<double> alpha_amp;
  std::complex<double> beta_amp;
  double omega_g_shift;  // part of omega contributed by omega^|g>

  double alpha_sq() const { return std::norm(alpha_amp); }
};

/// Builds EffectiveParams from the reduced quantities, filling alpha and beta.
EffectiveParams make_effective_params(double omega, double xi_drive, double g, double gamma,
                                      double nu, double omega_g_shift = 0.0);

EffectiveParams effective_params(const AtomSpecies& species, const DriveParams& drive,
                                 const MembraneMode& mode, const CouplingInput& coupling);

struct RegimeWarning {
  std::string message;
  double ratio;  // the offending ratio (small is bad for "much larger than" checks)
};

/// Adiabatic-elimination and Lamb-Dicke validity report. Empty at benign points.
std::vector<RegimeWarning> validate_regime(const AtomSpecies& species, const DriveParams& drive,
                                           const MembraneMode& mode, const EffectiveParams& params);

/// Ratios |Delta| / x for each quantity that must be small against the detuning.
struct RegimeRatios {
  double delta_over_rabi;
  double delta_over_phonon;
  double delta_over_nu;
  double delta_over_omega_g;
  double delta_over_linewidth;
};

RegimeRatios regime_ratios(const AtomSpecies& species, const DriveParams& drive,
                           const MembraneMode& mode, const EffectiveParams& params);

}  // namespace cpcool
