#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "cpcool/error.hpp"
#include "cpcool/moment_dynamics.hpp"

namespace cpcool {

namespace {

using Eigen::MatrixXd;

// Higham (2005), Table 10.2 / Algorithm 10.20.
constexpr std::array<double, 5> kTheta{1.495585217958292e-2, 2.539398330063230e-1,
                                       9.504178996162932e-1, 2.097847961257068e0,
                                       5.371920351148152e0};

constexpr std::array<double, 14> kB13{64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                      1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                      670442572800.0,      33522128640.0,       1323241920.0,
                                      40840800.0,          960960.0,            16380.0,
                                      182.0,               1.0};

MatrixXd pade_low(const MatrixXd& A, const double* b, int m) {
  const auto n = A.rows();
  const MatrixXd I = MatrixXd::Identity(n, n);
  const MatrixXd A2 = A * A;
  MatrixXd power = I;
  MatrixXd U_inner = MatrixXd::Zero(n, n);
  MatrixXd V = MatrixXd::Zero(n, n);
  for (int k = 0; k <= m; k += 2) {
    V += b[k] * power;
    U_inner += b[k + 1] * power;
    power = power * A2;
  }
  const MatrixXd U = A * U_inner;
  return (V - U).partialPivLu().solve(V + U);
}

double norm1(const MatrixXd& M) { return M.cwiseAbs().colwise().sum().maxCoeff(); }

}  // namespace

MatrixXd expm(const MatrixXd& M) {
  const auto n = M.rows();
  const double nrm = norm1(M);
  if (!std::isfinite(nrm)) return MatrixXd::Constant(n, n, std::numeric_limits<double>::quiet_NaN());

  static constexpr double b3[]{120.0, 60.0, 12.0, 1.0};
  static constexpr double b5[]{30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
  static constexpr double b7[]{17297280.0, 8648640.0, 1995840.0, 277200.0,
                               25200.0,    1512.0,    56.0,      1.0};
  static constexpr double b9[]{17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
                               2162160.0,     110880.0,     3960.0,       90.0,        1.0};
  if (nrm <= kTheta[0]) return pade_low(M, b3, 3);
  if (nrm <= kTheta[1]) return pade_low(M, b5, 5);
  if (nrm <= kTheta[2]) return pade_low(M, b7, 7);
  if (nrm <= kTheta[3]) return pade_low(M, b9, 9);

  const int s = std::max(0, static_cast<int>(std::ceil(std::log2(nrm / kTheta[4]))));
  const MatrixXd A = M * std::ldexp(1.0, -s);
  const MatrixXd I = MatrixXd::Identity(n, n);
  const MatrixXd A2 = A * A;
  const MatrixXd A4 = A2 * A2;
  const MatrixXd A6 = A4 * A2;
  const auto& b = kB13;
  const MatrixXd U = A * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 + b[5] * A4 +
                          b[3] * A2 + b[1] * I);
  const MatrixXd V =
      A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
  MatrixXd R = (V - U).partialPivLu().solve(V + U);
  for (int i = 0; i < s; ++i) R = R * R;
  return R;
}

namespace {

void check_grid(std::span<const double> t_grid) {
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] >= 0.0)) throw DomainError("evolve: time grid must be nonnegative");
    if (i > 0 && t_grid[i] < t_grid[i - 1]) throw DomainError("evolve: time grid must be sorted");
  }
}

void evolve_expm(const MomentSystem& sys, const MomentVector& x0, std::span<const double> t_grid,
                 Trajectory& out) {
  MatrixXd aug = MatrixXd::Zero(kMomentCount + 1, kMomentCount + 1);
  aug.topLeftCorner(kMomentCount, kMomentCount) = sys.matrix_A;
  aug.topRightCorner(kMomentCount, 1) = sys.vector_b;
  for (double t : t_grid) {
    MomentVector x;
    if (t == 0.0) {
      x = x0;
    } else {
      const MatrixXd E = expm(aug * t);
      x = E.topLeftCorner(kMomentCount, kMomentCount) * x0 + E.topRightCorner(kMomentCount, 1);
    }
    if (!x.allFinite()) out.divergent = true;
    out.times.push_back(t);
    out.states.push_back(x);
  }
}

// One Crank-Nicolson step of dx/dt = A x + b.
MomentVector cn_step(const MomentMatrix& A, const MomentVector& b, const MomentVector& x, double h) {
  const MomentMatrix lhs = MomentMatrix::Identity() - (0.5 * h) * A;
  const MomentVector rhs = x + (0.5 * h) * (A * x) + h * b;
  return lhs.partialPivLu().solve(rhs);
}

void evolve_integrator(const MomentSystem& sys, const MomentVector& x0,
                       std::span<const double> t_grid, const EvolveOptions& opts,
                       Trajectory& out) {
  const MomentMatrix& A = sys.matrix_A;
  const MomentVector& b = sys.vector_b;
  const double atol =
      opts.abs_tol > 0.0 ? opts.abs_tol : opts.rel_tol * std::max(1.0, x0.cwiseAbs().maxCoeff());
  const double a_norm = A.cwiseAbs().rowwise().sum().maxCoeff();

  double t = 0.0;
  double h = a_norm > 0.0 ? 1e-3 / a_norm : 1.0;
  MomentVector x = x0;
  long steps = 0;
  bool blown = false;

  for (double target : t_grid) {
    while (!blown && t < target) {
      const double hh = std::min(h, target - t);
      const MomentVector coarse = cn_step(A, b, x, hh);
      const MomentVector half = cn_step(A, b, cn_step(A, b, x, 0.5 * hh), 0.5 * hh);
      const MomentVector fine = (4.0 * half - coarse) / 3.0;
      const double err = (half - coarse).cwiseAbs().maxCoeff() / 3.0;
      const double scale =
          atol + opts.rel_tol * std::max(x.cwiseAbs().maxCoeff(), fine.cwiseAbs().maxCoeff());
      const double ratio = err / scale;
      if (!fine.allFinite()) {
        blown = true;
        break;
      }
      if (ratio <= 1.0) {
        x = fine;
        t = (hh == target - t) ? target : t + hh;
      }
      const double factor = ratio > 0.0 ? 0.9 * std::pow(ratio, -1.0 / 3.0) : 5.0;
      h = hh * std::clamp(factor, 0.2, 5.0);
      if (++steps > opts.max_steps)
        throw NumericalError("evolve: integrator step budget exhausted", ratio * opts.rel_tol);
    }
    if (blown) {
      out.divergent = true;
      x.setConstant(std::numeric_limits<double>::quiet_NaN());
    }
    out.times.push_back(target);
    out.states.push_back(x);
  }
}

}  // namespace

Trajectory evolve(const MomentSystem& system, const MomentState& x0, std::span<const double> t_grid,
                  const EvolveOptions& opts) {
  check_grid(t_grid);
  Trajectory out;
  out.times.reserve(t_grid.size());
  out.states.reserve(t_grid.size());

  const double scale = system.matrix_A.cwiseAbs().maxCoeff();
  out.divergent = max_growth_rate(system) > 1e-12 * scale;

  if (opts.method == EvolveMethod::MatrixExponential) {
    evolve_expm(system, x0.vector(), t_grid, out);
  } else {
    evolve_integrator(system, x0.vector(), t_grid, opts, out);
  }
  return out;
}

}  // namespace cpcool
