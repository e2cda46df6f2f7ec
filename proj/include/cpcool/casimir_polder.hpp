#pragma once

#include "cpcool/constants.hpp"

namespace cpcool {

/// Single-resonance polarizability on the imaginary axis,
/// alpha(i xi) = alpha_0 omega_eg^2 / (omega_eg^2 + xi^2).
double polarizability_iw(const AtomSpecies& species, double xi);

struct ReflectionCoefficients {
  double te;  // in (-1, 0]
  double tm;  // in [0, 1)
};

/// Free-standing graphene with zero mass gap and chemical potential.
ReflectionCoefficients reflection_coeffs(double xi, double k_parallel,
                                         const PhysicalConstants& pc = kConstants);

struct CpIntegrandKinematics {
  double xi;
  double k_parallel;
  double gamma_0z;  // sqrt(1 + xi^2 / (c^2 k_par^2)), vacuum
  double k0;        // xi / c
};

CpIntegrandKinematics kinematics(double xi, double k_parallel,
                                 const PhysicalConstants& pc = kConstants);

struct CpOptions {
  double rel_tol = 1e-8;
  int max_subdivisions = 4000;
};

/// Ground-state potential (J) at distance z_a (m) above the sheet.
double cp_potential_ground(const AtomSpecies& species, double z_a, const CpOptions& opts = {});

/// Same potential at temperature T (K): the imaginary-frequency integral is
/// replaced by the Matsubara sum with half weight on the static term.
double matsubara_potential(const AtomSpecies& species, double z_a, double temperature,
                           const CpOptions& opts = {});

/// Matsubara frequency xi_n (rad/s).
double matsubara_frequency(int n, double temperature);

/// Weight of the n-th Matsubara term: 1/2 for n = 0, 1 otherwise.
double matsubara_weight(int n);

/// U(z) z^4 expressed as an ordinary-frequency coefficient in Hz um^4.
double effective_c4(const AtomSpecies& species, double z_a, const CpOptions& opts = {});

/// Fourier-domain CP coupling: hbar omega = pi C4 q n0 K1(q z_a) / z_a.
/// c4 in Hz um^4, q in 1/m, z_a in m, n0 in 1/m^2; returns rad/s.
double cp_fourier_wq(double c4, double q, double z_a, double n0);

}  // namespace cpcool
