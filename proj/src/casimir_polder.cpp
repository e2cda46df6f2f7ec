#include "cpcool/casimir_polder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cpcool/error.hpp"
#include "cpcool/quadrature.hpp"
#include "cpcool/special_functions.hpp"

namespace cpcool {

namespace {

constexpr double kPi = std::numbers::pi;

// Inner transverse integral at imaginary frequency xi, written in terms of
// kappa = k_par * gamma_0z = k0 + s so that the exponential is e^{-2 kappa z}.
// The e^{-2 k0 z} factor is pulled out and applied by the caller.
double transverse_integral(double xi, double z_a, const QuadratureOptions& qopt) {
  const double c = kConstants.c_light;
  const double k0 = xi / c;
  const double xi2 = xi * xi;
  auto integrand = [&](double s) {
    const double kappa = k0 + s;
    const double k_par = std::sqrt(s * (2.0 * k0 + s));
    const auto r = reflection_coeffs(xi, k_par);
    const double bracket = xi2 * r.te + r.tm * (xi2 - 2.0 * kappa * kappa * c * c);
    return std::exp(-2.0 * s * z_a) * bracket;
  };
  return integrate_semi_infinite(integrand, 0.0, 1.0 / z_a, qopt).value;
}

// Spectral density F(xi) such that U = hbar mu0 / (8 pi^2) * int_0^inf F dxi.
double spectral_density(const AtomSpecies& species, double xi, double z_a,
                        const QuadratureOptions& inner) {
  const double k0 = xi / kConstants.c_light;
  const double damping = std::exp(-2.0 * k0 * z_a);
  if (damping == 0.0) return 0.0;
  return polarizability_iw(species, xi) * damping * transverse_integral(xi, z_a, inner);
}

struct FrequencyIntegrator {
  const AtomSpecies& species;
  double z_a;
  QuadratureOptions outer;
  QuadratureOptions inner;

  double density(double xi) const { return spectral_density(species, xi, z_a, inner); }

  // Split where the polarizability or the retardation cutoff sets in; beyond
  // it the density decays on the scale c/(2 z).
  double split() const {
    return std::min(species.transition_angular_frequency, kConstants.c_light / (2.0 * z_a));
  }

  double integral_from(double lower) const {
    auto f = [this](double xi) { return density(xi); };
    const double s = split();
    double total = 0.0;
    double tail_start = lower;
    if (lower < s) {
      total += integrate(f, lower, s, outer).value;
      tail_start = s;
    }
    total += integrate_semi_infinite(f, tail_start, kConstants.c_light / z_a, outer).value;
    return total;
  }
};

FrequencyIntegrator make_integrator(const AtomSpecies& species, double z_a, const CpOptions& opts) {
  QuadratureOptions outer{.rel_tol = opts.rel_tol, .abs_tol = 0.0,
                          .max_subdivisions = opts.max_subdivisions};
  QuadratureOptions inner{.rel_tol = opts.rel_tol * 1e-2, .abs_tol = 0.0,
                          .max_subdivisions = opts.max_subdivisions};
  return FrequencyIntegrator{species, z_a, outer, inner};
}

void require_distance(double z_a) {
  if (!(z_a > 0.0) || !std::isfinite(z_a)) {
    throw DomainError("atom-surface distance must be positive");
  }
}

}  // namespace

double polarizability_iw(const AtomSpecies& species, double xi) {
  if (!(xi >= 0.0)) {
    throw DomainError("polarizability_iw requires xi >= 0");
  }
  const double w2 = species.transition_angular_frequency * species.transition_angular_frequency;
  return species.static_polarizability * w2 / (w2 + xi * xi);
}

ReflectionCoefficients reflection_coeffs(double xi, double k_parallel, const PhysicalConstants& pc) {
  if (!(xi >= 0.0) || !(k_parallel >= 0.0)) {
    throw DomainError("reflection_coeffs requires xi >= 0 and k_parallel >= 0");
  }
  if (xi == 0.0 && k_parallel == 0.0) {
    throw DomainError("reflection_coeffs undefined at xi = k_parallel = 0");
  }
  const double k0 = xi / pc.c_light;
  const double light = std::hypot(k0, k_parallel);
  const double dirac = std::hypot(k0, pc.v_tilde * k_parallel);
  const double coupling = 4.0 * kPi * pc.alpha_fs;
  ReflectionCoefficients r;
  r.tm = coupling * light / (coupling * light + 8.0 * dirac);
  r.te = -coupling * dirac / (coupling * dirac + 8.0 * light);
  return r;
}

CpIntegrandKinematics kinematics(double xi, double k_parallel, const PhysicalConstants& pc) {
  if (!(xi >= 0.0) || !(k_parallel > 0.0)) {
    throw DomainError("kinematics requires xi >= 0 and k_parallel > 0");
  }
  const double k0 = xi / pc.c_light;
  const double ratio = k0 / k_parallel;
  return CpIntegrandKinematics{xi, k_parallel, std::sqrt(1.0 + ratio * ratio), k0};
}

double cp_potential_ground(const AtomSpecies& species, double z_a, const CpOptions& opts) {
  require_distance(z_a);
  const auto integrator = make_integrator(species, z_a, opts);
  const double prefactor = kConstants.hbar * kConstants.mu0 / (8.0 * kPi * kPi);
  return prefactor * integrator.integral_from(0.0);
}

double matsubara_frequency(int n, double temperature) {
  if (!(temperature >= 0.0)) {
    throw DomainError("temperature must be non-negative");
  }
  return kTwoPi * kConstants.k_boltzmann * temperature * n / kConstants.hbar;
}

double matsubara_weight(int n) { return n == 0 ? 0.5 : 1.0; }

double matsubara_potential(const AtomSpecies& species, double z_a, double temperature,
                           const CpOptions& opts) {
  require_distance(z_a);
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
    throw DomainError("temperature must be non-negative");
  }
  if (temperature == 0.0) {
    return cp_potential_ground(species, z_a, opts);
  }

  const auto integrator = make_integrator(species, z_a, opts);
  const double spacing = matsubara_frequency(1, temperature);
  const double prefactor = kConstants.mu0 * kConstants.k_boltzmann * temperature / (4.0 * kPi);

  // Terms needed before e^{-2 xi z / c} has fallen below the tolerance.
  const double decay_scale = kConstants.c_light / (2.0 * z_a);
  const double needed = decay_scale * std::log(1.0 / opts.rel_tol) / spacing;
  constexpr int kDirectCap = 4096;

  double sum = 0.0;
  if (needed < kDirectCap) {
    int quiet = 0;
    for (int n = 0; n < 4 * kDirectCap; ++n) {
      const double term = matsubara_weight(n) * integrator.density(n * spacing);
      sum += term;
      quiet = std::abs(term) < opts.rel_tol * std::abs(sum) ? quiet + 1 : 0;
      if (quiet >= 3) return prefactor * sum;
    }
    throw NumericalError("Matsubara sum did not converge", std::abs(sum));
  }

  // Dense spectrum: explicit leading terms, Euler-Maclaurin for the rest.
  constexpr int kLeading = 16;
  for (int n = 0; n < kLeading; ++n) {
    sum += matsubara_weight(n) * integrator.density(n * spacing);
  }
  const double x = kLeading * spacing;
  const double fx = integrator.density(x);
  const double slope = (integrator.density(x + spacing) - integrator.density(x - spacing)) /
                       (2.0 * spacing);
  sum += integrator.integral_from(x) / spacing + 0.5 * fx - spacing * slope / 12.0;
  return prefactor * sum;
}

double effective_c4(const AtomSpecies& species, double z_a, const CpOptions& opts) {
  const double u = cp_potential_ground(species, z_a, opts);
  const double z4 = z_a * z_a * z_a * z_a;
  return u * z4 / planck_h() * 1e24;
}

double cp_fourier_wq(double c4, double q, double z_a, double n0) {
  if (!(q > 0.0) || !(z_a > 0.0)) {
    throw DomainError("cp_fourier_wq requires q > 0 and z_a > 0");
  }
  if (!(n0 >= 0.0)) {
    throw DomainError("cp_fourier_wq requires n0 >= 0");
  }
  const double c4_si = c4 * 1e-24;  // Hz m^4
  return kTwoPi * kPi * c4_si * q * n0 * bessel_k1(q * z_a) / z_a;
}

}  // namespace cpcool
