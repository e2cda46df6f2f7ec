#include "cpcool/constants.hpp"

#include <cmath>
#include <string>

#include "cpcool/error.hpp"

namespace cpcool {

namespace {

// D. A. Steck, "Rubidium 87 D Line Data" (rev. 2.2.1): lambda_D2 = 780.241209686 nm,
// m = 1.443160648e-25 kg, ground-state scalar polarizability h * 0.0794 Hz/(V/cm)^2.
constexpr double kRbD2Wavelength = 780.241209686e-9;
constexpr double kRbMass = 1.443160648e-25;
constexpr double kRbPolarizability = 0.0794 * 6.62607015e-34 / 1.0e4;

// Linewidth as quoted with the red-point parameter set, Gamma/2pi = 6.07 MHz.
constexpr double kRbLinewidth = kTwoPi * 6.07e6;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

AtomSpecies rubidium87() {
  AtomSpecies s{};
  s.d2_wavelength = kRbD2Wavelength;
  s.transition_angular_frequency = kTwoPi * kConstants.c_light / kRbD2Wavelength;
  s.linewidth_gamma = kRbLinewidth;
  s.static_polarizability = kRbPolarizability;
  s.atomic_mass = kRbMass;
  return s;
}

void validate(const AtomSpecies& s) {
  require_positive(s.transition_angular_frequency, "transition_angular_frequency");
  require_positive(s.linewidth_gamma, "linewidth_gamma");
  require_positive(s.static_polarizability, "static_polarizability");
  require_positive(s.atomic_mass, "atomic_mass");
  require_positive(s.d2_wavelength, "d2_wavelength");
  const double expected = kTwoPi * kConstants.c_light / s.d2_wavelength;
  if (std::abs(s.transition_angular_frequency - expected) > 1e-12 * expected) {
    throw DomainError("transition_angular_frequency inconsistent with d2_wavelength");
  }
}

GrapheneSheet default_graphene_sheet() {
  return GrapheneSheet{
      .length_L = 5e-6,
      .width_w = 5e-6,
      .thickness_t = 0.3e-9,
      .density_rho = 2200.0,
      .youngs_E = 1.0e12,
      .tension_T = 1e-9,
      .clamping_A = kClampingDoublyClamped,
  };
}

void validate(const GrapheneSheet& s) {
  require_positive(s.length_L, "length");
  require_positive(s.width_w, "width");
  require_positive(s.thickness_t, "thickness");
  require_positive(s.density_rho, "density");
  require_positive(s.youngs_E, "youngs_modulus");
  require_positive(s.clamping_A, "clamping");
  if (!(s.tension_T >= 0.0) || !std::isfinite(s.tension_T)) {
    throw DomainError("tension must be non-negative and finite");
  }
}

const RedPointParameters& red_point() {
  static const RedPointParameters table{
      .eta = 0.25,
      .gamma_Gamma = kTwoPi * 6.07e6,
      .nu = kTwoPi * 2.7e6,
      .omega_ph = kTwoPi * 477.0,
      .omega_rabi = kTwoPi * 1.0e7,
      .g = -kTwoPi * 4.77e4,
      .delta = kTwoPi * 3.6e7,
      .z_a = 0.1e-6,
      .c4 = -14.26,
  };
  return table;
}

}  // namespace cpcool
