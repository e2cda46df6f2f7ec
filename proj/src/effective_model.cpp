#include "cpcool/effective_model.hpp"

#include <cmath>
#include <limits>

#include "cpcool/error.hpp"

namespace cpcool {

namespace {

// Below this |Delta|/x ratio the adiabatic elimination is not trustworthy.
constexpr double kAdiabaticHardLimit = 2.0;
constexpr double kLambDickeLimit = 0.5;

double safe_ratio(double num, double den) {
  return den == 0.0 ? std::numeric_limits<double>::infinity() : std::abs(num) / std::abs(den);
}

}  // namespace

void validate(const DriveParams& d) {
  if (!(d.rabi_Omega > 0.0)) throw DomainError("Rabi frequency must be positive");
  if (!(d.phonon_omega_ph > 0.0)) throw DomainError("phonon frequency must be positive");
  if (!(d.lamb_dicke_eta > 0.0 && d.lamb_dicke_eta < 1.0)) {
    throw DomainError("Lamb-Dicke parameter must lie in (0, 1)");
  }
  if (!std::isfinite(d.detuning_Delta)) throw DomainError("detuning must be finite");
}

EffectiveParams make_effective_params(double omega, double xi_drive, double g, double gamma,
                                      double nu, double omega_g_shift) {
  if (!(gamma > 0.0)) throw DomainError("phonon damping must be positive");
  if (!(nu > 0.0)) throw DomainError("membrane frequency must be positive");
  EffectiveParams p{};
  p.omega = omega;
  p.xi_drive = xi_drive;
  p.g_coupling = g;
  p.gamma_cool = gamma;
  p.nu = nu;
  p.omega_g_shift = omega_g_shift;
  p.alpha_amp = xi_drive / std::complex<double>(gamma / 2.0, omega);
  p.beta_amp = std::complex<double>(0.0, -g * std::norm(p.alpha_amp) / nu);
  return p;
}

EffectiveParams effective_params(const AtomSpecies& species, const DriveParams& drive,
                                 const MembraneMode& mode, const CouplingInput& coupling) {
  validate(drive);
  const double Gamma = species.linewidth_gamma;
  const double Delta = drive.detuning_Delta;
  const double denom = 4.0 * Delta * Delta + Gamma * Gamma;
  if (denom == 0.0) {
    throw SingularError("Gamma = Delta = 0 leaves the effective rates undefined");
  }
  const double eta = drive.lamb_dicke_eta;
  const double rabi2 = drive.rabi_Omega * drive.rabi_Omega;

  const double gamma = Gamma * eta * eta * rabi2 / denom;
  const double xi = eta * rabi2 * Delta / denom;
  const double light_shift = eta * eta * rabi2 * Delta / denom;
  const double shift = coupling.shift_omega ? coupling.omega_g : 0.0;
  const double omega = drive.phonon_omega_ph - light_shift + shift;

  const double g = coupling.g_override
                       ? *coupling.g_override
                       : 2.0 * mode.q0 * mode.zero_point * coupling.n0_per_um2 * coupling.omega_g;
  return make_effective_params(omega, xi, g, gamma, mode.nu, shift);
}

RegimeRatios regime_ratios(const AtomSpecies& species, const DriveParams& drive,
                           const MembraneMode& mode, const EffectiveParams& params) {
  const double D = drive.detuning_Delta;
  return RegimeRatios{
      .delta_over_rabi = safe_ratio(D, drive.rabi_Omega),
      .delta_over_phonon = safe_ratio(D, drive.phonon_omega_ph),
      .delta_over_nu = safe_ratio(D, mode.nu),
      .delta_over_omega_g = safe_ratio(D, params.omega_g_shift),
      .delta_over_linewidth = safe_ratio(D, species.linewidth_gamma),
  };
}

std::vector<RegimeWarning> validate_regime(const AtomSpecies& species, const DriveParams& drive,
                                           const MembraneMode& mode, const EffectiveParams& params) {
  std::vector<RegimeWarning> out;
  const auto r = regime_ratios(species, drive, mode, params);
  auto check = [&](double ratio, const char* what) {
    if (ratio < kAdiabaticHardLimit) {
      out.push_back({std::string("adiabatic elimination invalid: |Delta|/") + what + " too small",
                     ratio});
    }
  };
  check(r.delta_over_rabi, "Omega");
  check(r.delta_over_phonon, "omega_ph");
  check(r.delta_over_nu, "nu");
  check(r.delta_over_omega_g, "omega_g");
  check(r.delta_over_linewidth, "Gamma");
  if (drive.lamb_dicke_eta > kLambDickeLimit) {
    out.push_back({"Lamb-Dicke expansion unreliable", drive.lamb_dicke_eta});
  }
  return out;
}

}  // namespace cpcool
