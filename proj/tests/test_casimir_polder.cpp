#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cpcool/casimir_polder.hpp"
#include "cpcool/error.hpp"
#include "test_support.hpp"

using namespace cpcool;
using testsupport::rel_diff;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("polarizability on the imaginary axis") {
  const AtomSpecies rb = rubidium87();
  const double a0 = rb.static_polarizability;
  const double w = rb.transition_angular_frequency;
  CHECK(polarizability_iw(rb, 0.0) == a0);
  CHECK(polarizability_iw(rb, w) == doctest::Approx(a0 / 2.0).epsilon(1e-15));
  CHECK(polarizability_iw(rb, 10.0 * w) == doctest::Approx(a0 / 101.0).epsilon(1e-15));
  double prev = a0;
  for (double x = 0.0; x < 20.0 * w; x += 0.37 * w) {
    const double v = polarizability_iw(rb, x);
    CHECK(v > 0.0);
    CHECK(v <= prev);
    prev = v;
  }
  CHECK_THROWS_AS(polarizability_iw(rb, -1.0), DomainError);
}

TEST_CASE("reflection coefficient limits") {
  const double a = 1.0 / 137.0;
  SUBCASE("k_par -> 0 at finite frequency") {
    const auto r = reflection_coeffs(1e15, 1e-6);
    CHECK(r.tm == doctest::Approx(kPi * a / (kPi * a + 2.0)).epsilon(1e-12));
    CHECK(r.tm == doctest::Approx(0.011337).epsilon(1e-4));
    CHECK(r.te == doctest::Approx(-0.011337).epsilon(1e-4));
  }
  SUBCASE("static limit") {
    const auto r = reflection_coeffs(0.0, 1e6);
    const double vt = 1.0 / 300.0;
    CHECK(r.tm == doctest::Approx(4.0 * kPi * a / (4.0 * kPi * a + 8.0 * vt)).epsilon(1e-14));
    CHECK(r.tm == doctest::Approx(0.7747).epsilon(1e-4));
    CHECK(r.te == doctest::Approx(-4.0 * kPi * a * vt / (4.0 * kPi * a * vt + 8.0)).epsilon(1e-14));
    CHECK(r.te == doctest::Approx(-3.82e-5).epsilon(1e-3));
  }
  SUBCASE("degenerate and negative input") {
    CHECK_THROWS_AS(reflection_coeffs(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(reflection_coeffs(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(reflection_coeffs(1.0, -1.0), DomainError);
  }
}

TEST_CASE("reflection coefficients stay in range and vanish linearly with alpha") {
  PhysicalConstants weak = kConstants;
  weak.alpha_fs = kConstants.alpha_fs * 1e-6;
  PhysicalConstants weaker = kConstants;
  weaker.alpha_fs = kConstants.alpha_fs * 1e-7;
  for (double lx = 8.0; lx <= 18.0; lx += 1.0) {
    for (double lk = 2.0; lk <= 10.0; lk += 1.0) {
      const double xi = std::pow(10.0, lx), k = std::pow(10.0, lk);
      const auto r = reflection_coeffs(xi, k);
      CHECK(r.tm >= 0.0);
      CHECK(r.tm < 1.0);
      CHECK(r.te <= 0.0);
      CHECK(r.te > -1.0);
      const auto r1 = reflection_coeffs(xi, k, weak);
      const auto r2 = reflection_coeffs(xi, k, weaker);
      CHECK(r1.tm / r2.tm == doctest::Approx(10.0).epsilon(1e-5));
      CHECK(r1.te / r2.te == doctest::Approx(10.0).epsilon(1e-5));
    }
  }
}

TEST_CASE("integrand kinematics") {
  const auto k = kinematics(3e14, 2e6);
  CHECK(k.k0 == doctest::Approx(3e14 / kConstants.c_light));
  CHECK(k.gamma_0z == doctest::Approx(std::sqrt(1.0 + std::pow(k.k0 / 2e6, 2))));
  CHECK(kinematics(0.0, 1.0).gamma_0z == 1.0);
  CHECK(kinematics(1e10, 1.0).gamma_0z >= 1.0);
}

TEST_CASE("ground-state potential is attractive and monotone") {
  const AtomSpecies rb = rubidium87();
  double prev = -INFINITY;
  for (double z : {0.05e-6, 0.1e-6, 0.3e-6, 1e-6, 3e-6, 10e-6}) {
    const double u = cp_potential_ground(rb, z);
    INFO("z = " << z);
    CHECK(u < 0.0);
    CHECK(u > prev);
    prev = u;
  }
  CHECK_THROWS_AS(cp_potential_ground(rb, 0.0), DomainError);
  CHECK_THROWS_AS(cp_potential_ground(rb, -1e-6), DomainError);
}

TEST_CASE("retarded regime: z^-4 law and C4") {
  const AtomSpecies rb = rubidium87();
  const double u5 = cp_potential_ground(rb, 5e-6);
  const double u10 = cp_potential_ground(rb, 10e-6);
  CHECK(u5 / u10 == doctest::Approx(16.0).epsilon(0.05));
  const double c4 = effective_c4(rb, 10e-6);
  CHECK(c4 < 0.0);
  CHECK(std::abs(c4 - (-14.26)) <= 0.2 * 14.26);
}

TEST_CASE("potential is proportional to the polarizability") {
  AtomSpecies rb = rubidium87();
  const double u = cp_potential_ground(rb, 1e-6);
  rb.static_polarizability *= 1e-12;
  const double small = cp_potential_ground(rb, 1e-6);
  CHECK(small / u == doctest::Approx(1e-12).epsilon(1e-9));
}

TEST_CASE("quadrature tolerance invariance of the potential") {
  const AtomSpecies rb = rubidium87();
  const double a = cp_potential_ground(rb, 0.5e-6, CpOptions{.rel_tol = 1e-8});
  const double b = cp_potential_ground(rb, 0.5e-6, CpOptions{.rel_tol = 1e-10});
  CHECK(rel_diff(a, b) < 1e-8);
}

TEST_CASE("Matsubara sum") {
  const AtomSpecies rb = rubidium87();
  CHECK(matsubara_weight(0) == 0.5);
  CHECK(matsubara_weight(1) == 1.0);
  CHECK(matsubara_weight(7) == 1.0);
  CHECK(matsubara_frequency(1, 300.0) == doctest::Approx(2.47e14).epsilon(2e-3));
  CHECK(matsubara_frequency(3, 2.0) == doctest::Approx(3.0 * matsubara_frequency(1, 2.0)));
  CHECK(matsubara_potential(rb, 1e-6, 0.0) == cp_potential_ground(rb, 1e-6));
  CHECK_THROWS_AS(matsubara_potential(rb, 1e-6, -1.0), DomainError);

  const double u0 = cp_potential_ground(rb, 1e-6);
  CHECK(rel_diff(matsubara_potential(rb, 1e-6, 1e-9), u0) < 1e-3);
  // Far from the sheet at high T only the static term survives, so U is linear in T.
  const double u1 = matsubara_potential(rb, 20e-6, 1e3);
  const double u2 = matsubara_potential(rb, 20e-6, 2e3);
  CHECK(u1 < 0.0);
  CHECK(u2 / u1 == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(std::abs(u1) > std::abs(cp_potential_ground(rb, 20e-6)));
}

TEST_CASE("Fourier-domain coupling") {
  const double q = 1.2566e6, z = 1e-6;
  const double k1 = testsupport::bessel_k_integral(1.0, 1.2566);
  const double expected = 2.0 * kPi * kPi * (-14.26) * 1.2566 * k1;
  CHECK(cp_fourier_wq(-14.26, q, z, 1e12) == doctest::Approx(expected).epsilon(1e-9));

  // Small q z: K1(x) ~ 1/x, so hbar w -> pi C4 n0 / z^2.
  const double tiny_q = 1e-2;
  const double asym = 2.0 * kPi * kPi * (-14.26e-24) * 1e12 / (z * z);
  CHECK(cp_fourier_wq(-14.26, tiny_q, z, 1e12) == doctest::Approx(asym).epsilon(1e-6));

  CHECK(cp_fourier_wq(-14.26, q, z, 0.0) == 0.0);
  CHECK(cp_fourier_wq(14.26, q, z, 1e12) > 0.0);
  CHECK(cp_fourier_wq(-14.26, q, z, 1e12) < 0.0);
  CHECK(std::abs(cp_fourier_wq(-14.26, q, 2e-6, 1e12)) < std::abs(cp_fourier_wq(-14.26, q, z, 1e12)));
  CHECK_THROWS_AS(cp_fourier_wq(-14.26, 0.0, z, 1.0), DomainError);
  CHECK_THROWS_AS(cp_fourier_wq(-14.26, q, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(cp_fourier_wq(-14.26, q, z, -1.0), DomainError);
}
