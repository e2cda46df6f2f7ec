#pragma once

namespace cpcool {

/// Modified Bessel function of the second kind, order one, for x > 0.
/// Relative accuracy better than 1e-10 on [1e-6, 700]; throws DomainError for x <= 0.
double bessel_k1(double x);

}  // namespace cpcool
