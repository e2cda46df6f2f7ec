#pragma once

#include "cpcool/constants.hpp"

namespace cpcool {

struct MembraneMode {
  double nu;          // fundamental angular frequency, rad/s
  double q0;          // 2 pi / L, 1/m
  double mass_M;      // kg
  double zero_point;  // sqrt(hbar / (2 M nu)), m
};

/// Fundamental flexural angular frequency of a clamped sheet under tension.
double fundamental_frequency(const GrapheneSheet& sheet);

double membrane_mass(const GrapheneSheet& sheet);

MembraneMode mode_descriptor(const GrapheneSheet& sheet);

/// Descriptor with the frequency pinned to `nu` instead of the beam formula.
MembraneMode mode_descriptor(const GrapheneSheet& sheet, double nu);

}  // namespace cpcool
