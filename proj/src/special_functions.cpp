#include "cpcool/special_functions.hpp"

#include <cmath>

#include "cpcool/error.hpp"

namespace cpcool {

double bessel_k1(double x) {
  if (!(x > 0.0)) {
    throw DomainError("bessel_k1 requires x > 0");
  }
  return std::cyl_bessel_k(1.0, x);
}

}  // namespace cpcool
