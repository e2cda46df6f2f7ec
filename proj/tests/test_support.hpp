#pragma once

// Oracles written independently of the library implementation.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cpcool/config.hpp"
#include "cpcool/effective_model.hpp"

namespace testsupport {

/// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt by the trapezoid rule.
/// The integrand is even and entire, so the rule converges geometrically.
inline double bessel_k_integral(double nu, double x) {
  const double t_end = std::acosh(1.0 + 760.0 / x);
  const double h = std::min(0.004, 0.05 / std::sqrt(x));
  const int n = static_cast<int>(std::ceil(t_end / h));
  double sum = 0.5;  // t = 0 term: exp(0) * cosh(0), scaled by e^{x}
  for (int i = 1; i <= n; ++i) {
    const double t = i * h;
    sum += std::exp(-x * (std::cosh(t) - 1.0)) * std::cosh(nu * t);
  }
  return sum * h * std::exp(-x);
}

inline double rel_diff(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

/// Largest componentwise relative difference of two moment vectors. Where one
/// side is exactly zero (a component that vanishes identically), the other is
/// measured against the largest component instead.
template <class V>
double componentwise_diff(const V& a, const V& b) {
  const double scale = std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff());
  double worst = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    const double d = (a[i] == 0.0 || b[i] == 0.0) ? std::abs(a[i] - b[i]) / scale : rel_diff(a[i], b[i]);
    worst = std::max(worst, d);
  }
  return worst;
}

/// Reduced parameters at the red point with the default (direct) coupling.
inline cpcool::EffectiveParams red_point_params() { return cpcool::resolved_params(cpcool::default_config()); }

/// Effective parameters from the physical ones, spelled out from the
/// adiabatic-elimination formulas.
inline cpcool::EffectiveParams params_from_physical(double Gamma, double nu, double omega_ph,
                                                    double rabi, double g, double delta,
                                                    double eta = 0.25) {
  const double den = 4.0 * delta * delta + Gamma * Gamma;
  const double gamma = Gamma * eta * eta * rabi * rabi / den;
  const double xi = eta * rabi * rabi * delta / den;
  const double omega = omega_ph - eta * eta * rabi * rabi * delta / den;
  return cpcool::make_effective_params(omega, xi, g, gamma, nu);
}

/// Log-uniform sample within one decade either side of the red point.
inline cpcool::EffectiveParams random_red_neighbour(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto f = [&] { return std::pow(10.0, u(rng)); };
  const double tp = 2.0 * std::numbers::pi;
  const double Gamma = tp * 6.07e6 * f();
  const double nu = tp * 2.7e6 * f();
  const double wph = tp * 477.0 * f();
  const double rabi = tp * 1.0e7 * f();
  const double g = -tp * 4.77e4 * f();
  const double delta = tp * 3.6e7 * f();
  return params_from_physical(Gamma, nu, wph, rabi, g, delta);
}

/// Parameter set for which every eigenvalue of the moment matrix has a
/// negative real part (found by a scan; omega < 0 and |omega| > nu).
inline cpcool::EffectiveParams stable_params() {
  const double omega = -67.61, nu = 39.66, g = -6.429, gamma = 24.09, alpha_sq = 4.575;
  const double xi = std::sqrt(alpha_sq) * std::hypot(omega, gamma / 2.0);
  return cpcool::make_effective_params(omega, xi, g, gamma, nu);
}

}  // namespace testsupport
