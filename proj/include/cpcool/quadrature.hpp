#pragma once

#include <functional>

namespace cpcool {

struct QuadratureOptions {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;
  int max_subdivisions = 2000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  int subdivisions = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod on [a, b]. Endpoints are never
/// evaluated, so integrable endpoint singularities are tolerated.
/// Throws NumericalError (carrying the achieved relative error) when the
/// subdivision budget runs out before the tolerance is met.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// Integral of f over [a, inf) using x = a - scale * log(1 - u), u in [0, 1).
/// Choose `scale` near the decay length of f; for f ~ exp(-(x-a)/L), scale = 2L
/// makes the mapped integrand vanish linearly at u = 1.
QuadratureResult integrate_semi_infinite(const Integrand& f, double a, double scale,
                                         const QuadratureOptions& opts = {});

}  // namespace cpcool
