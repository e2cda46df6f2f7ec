#pragma once

// Four-lane double wrapper for the templated kernels. Only include from
// translation units compiled with -mavx2.

#include <immintrin.h>

namespace cpcool::kernels {

struct Avx2Lane {
  __m256d v;

  Avx2Lane() = default;
  explicit Avx2Lane(__m256d x) : v(x) {}
  explicit Avx2Lane(double x) : v(_mm256_set1_pd(x)) {}

  static Avx2Lane load(const double* p) { return Avx2Lane(_mm256_loadu_pd(p)); }
  void store(double* p) const { _mm256_storeu_pd(p, v); }
};

inline Avx2Lane operator+(Avx2Lane a, Avx2Lane b) { return Avx2Lane(_mm256_add_pd(a.v, b.v)); }
inline Avx2Lane operator-(Avx2Lane a, Avx2Lane b) { return Avx2Lane(_mm256_sub_pd(a.v, b.v)); }
inline Avx2Lane operator*(Avx2Lane a, Avx2Lane b) { return Avx2Lane(_mm256_mul_pd(a.v, b.v)); }
inline Avx2Lane operator/(Avx2Lane a, Avx2Lane b) { return Avx2Lane(_mm256_div_pd(a.v, b.v)); }
// Sign flip, exact like scalar negation.
inline Avx2Lane operator-(Avx2Lane a) {
  return Avx2Lane(_mm256_xor_pd(a.v, _mm256_set1_pd(-0.0)));
}

}  // namespace cpcool::kernels
