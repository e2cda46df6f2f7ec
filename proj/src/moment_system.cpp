#include <algorithm>
#include <limits>
#include <cmath>

#include "cpcool/moment_dynamics.hpp"

namespace cpcool {

MomentState MomentState::from_occupations(double n, double m) {
  MomentVector v = MomentVector::Zero();
  v[MomentIndex::n] = n;
  v[MomentIndex::m] = m;
  return MomentState(v);
}

MomentSystem build_system(const EffectiveParams& p) {
  MomentSystem s;
  s.params = p;
  s.matrix_A.setZero();
  s.vector_b.setZero();

  const double w = p.omega;
  const double nu = p.nu;
  const double g = p.g_coupling;
  const double G = p.gamma_cool;
  const double a = p.alpha_sq();

  auto& A = s.matrix_A;
  auto& b = s.vector_b;
  constexpr int n = MomentIndex::n;
  constexpr int m = MomentIndex::m;
  auto k = [](int i) { return MomentIndex::k(i); };

  // dn/dt = g k7 - gamma n - gamma/2 k3
  A(n, k(7)) += g;
  A(n, n) += -G;
  A(n, k(3)) += -G / 2.0;

  // dm/dt = g |a|^2 k2 + g k6
  A(m, k(2)) += g * a;
  A(m, k(6)) += g;

  // dk1 = -nu k2
  A(k(1), k(2)) += -nu;

  // dk2 = nu k1 - 2 g |a|^2 - 2 g k3
  A(k(2), k(1)) += nu;
  b[k(2)] += -2.0 * g * a;
  A(k(2), k(3)) += -2.0 * g;

  // dk3 = omega k4 - gamma |a|^2 - gamma/2 k3
  A(k(3), k(4)) += w;
  b[k(3)] += -G * a;
  A(k(3), k(3)) += -G / 2.0;

  // dk4 = -omega k3 - 2 g |a|^2 k1 - gamma/2 k4
  A(k(4), k(3)) += -w;
  A(k(4), k(1)) += -2.0 * g * a;
  A(k(4), k(4)) += -G / 2.0;

  // dk5 = -nu k6 - omega k7 - gamma/2 k5 - gamma |a|^2 k1
  A(k(5), k(6)) += -nu;
  A(k(5), k(7)) += -w;
  A(k(5), k(5)) += -G / 2.0;
  A(k(5), k(1)) += -G * a;

  // dk6 = nu k5 - 2g|a|^2 k3 - 2g k11 - 4g|a|^2 n - 2g|a|^2 + omega k8
  //       - gamma/2 k6 - gamma |a|^2 k2
  A(k(6), k(5)) += nu;
  A(k(6), k(3)) += -2.0 * g * a;
  A(k(6), k(11)) += -2.0 * g;
  A(k(6), n) += -4.0 * g * a;
  b[k(6)] += -2.0 * g * a;
  A(k(6), k(8)) += w;
  A(k(6), k(6)) += -G / 2.0;
  A(k(6), k(2)) += -G * a;

  // dk7 = nu k8 + omega k5 - 2g|a|^2 k9 - 4g|a|^2 m - 2g|a|^2 - gamma/2 k7
  A(k(7), k(8)) += nu;
  A(k(7), k(5)) += w;
  A(k(7), k(9)) += -2.0 * g * a;
  A(k(7), m) += -4.0 * g * a;
  b[k(7)] += -2.0 * g * a;
  A(k(7), k(7)) += -G / 2.0;

  // dk8 = -nu k7 - 2g|a|^2 k4 - 2g k12 - omega k6 - 2g|a|^2 k10 - gamma/2 k8
  A(k(8), k(7)) += -nu;
  A(k(8), k(4)) += -2.0 * g * a;
  A(k(8), k(12)) += -2.0 * g;
  A(k(8), k(6)) += -w;
  A(k(8), k(10)) += -2.0 * g * a;
  A(k(8), k(8)) += -G / 2.0;

  // dk9 = nu k10 - 2g|a|^2 k2 - 2g k6
  A(k(9), k(10)) += nu;
  A(k(9), k(2)) += -2.0 * g * a;
  A(k(9), k(6)) += -2.0 * g;

  // dk10 = -nu k9 - 2g|a|^2 k1 - 2g k5
  A(k(10), k(9)) += -nu;
  A(k(10), k(1)) += -2.0 * g * a;
  A(k(10), k(5)) += -2.0 * g;

  // dk11 = omega k12 - 2g|a|^2 k7 - gamma k11 - gamma |a|^2 k3
  A(k(11), k(12)) += w;
  A(k(11), k(7)) += -2.0 * g * a;
  A(k(11), k(11)) += -G;
  A(k(11), k(3)) += -G * a;

  // dk12 = -omega k11 - 2g|a|^2 k5 - gamma k12 - gamma |a|^2 k4
  A(k(12), k(11)) += -w;
  A(k(12), k(5)) += -2.0 * g * a;
  A(k(12), k(12)) += -G;
  A(k(12), k(4)) += -G * a;

  return s;
}

std::vector<std::complex<double>> eigenvalues(const MomentSystem& system) {
  Eigen::EigenSolver<MomentMatrix> solver(system.matrix_A, false);
  const auto ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::complex<double> slow_eigenvalue(const MomentSystem& system) {
  Eigen::EigenSolver<MomentMatrix> solver(system.matrix_A, true);
  const auto values = solver.eigenvalues();
  const Eigen::Matrix<std::complex<double>, kMomentCount, kMomentCount> right = solver.eigenvectors();
  const Eigen::Matrix<std::complex<double>, kMomentCount, kMomentCount> left = right.inverse();

  // Participation of m in mode j: |L(j, m) R(m, j)|, rows of R^{-1} are the
  // matching left eigenvectors.
  int best = 0;
  double best_weight = -1.0;
  for (int j = 0; j < kMomentCount; ++j) {
    const double weight = std::abs(left(j, MomentIndex::m) * right(MomentIndex::m, j));
    if (weight > best_weight) {
      best_weight = weight;
      best = j;
    }
  }
  return values[best];
}

double max_growth_rate(const MomentSystem& system) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& e : eigenvalues(system)) best = std::max(best, e.real());
  return best;
}

}  // namespace cpcool
