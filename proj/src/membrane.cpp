#include "cpcool/membrane.hpp"

#include <cmath>

#include "cpcool/error.hpp"

namespace cpcool {

namespace {
constexpr double kTensionCoefficient = 0.57;
}

double fundamental_frequency(const GrapheneSheet& s) {
  validate(s);
  const double l2 = s.length_L * s.length_L;
  const double bending = s.clamping_A * std::sqrt(s.youngs_E / s.density_rho) * s.thickness_t / l2;
  const double tension = s.clamping_A * s.clamping_A * kTensionCoefficient * s.tension_T /
                         (s.density_rho * l2 * s.width_w * s.thickness_t);
  return kTwoPi * std::sqrt(bending * bending + tension);
}

double membrane_mass(const GrapheneSheet& s) {
  validate(s);
  return s.density_rho * s.length_L * s.width_w * s.thickness_t;
}

MembraneMode mode_descriptor(const GrapheneSheet& sheet) {
  return mode_descriptor(sheet, fundamental_frequency(sheet));
}

MembraneMode mode_descriptor(const GrapheneSheet& sheet, double nu) {
  if (!(nu > 0.0)) {
    throw DomainError("membrane frequency must be positive");
  }
  MembraneMode m{};
  m.nu = nu;
  m.q0 = kTwoPi / sheet.length_L;
  m.mass_M = membrane_mass(sheet);
  m.zero_point = std::sqrt(kConstants.hbar / (2.0 * m.mass_M * nu));
  return m;
}

}  // namespace cpcool
