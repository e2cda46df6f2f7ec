#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cpcool/effective_model.hpp"

namespace cpcool {

inline constexpr int kMomentCount = 14;

using MomentVector = Eigen::Matrix<double, kMomentCount, 1>;
using MomentMatrix = Eigen::Matrix<double, kMomentCount, kMomentCount>;

/// Component layout of the moment vector: n, m, then k1..k12.
struct MomentIndex {
  static constexpr int n = 0;
  static constexpr int m = 1;
  static constexpr int k(int i) { return 1 + i; }  // i in 1..12
};

/// Occupations and real coherences. n is the fluctuation part <da^+ da>.
class MomentState {
 public:
  MomentState() { values_.setZero(); }
  explicit MomentState(const MomentVector& v) : values_(v) {}

  /// Physical start: given occupations, all coherences zero.
  static MomentState from_occupations(double n, double m);

  double n() const { return values_[MomentIndex::n]; }
  double m() const { return values_[MomentIndex::m]; }
  double k(int i) const { return values_[MomentIndex::k(i)]; }

  const MomentVector& vector() const { return values_; }

 private:
  MomentVector values_;
};

/// dx/dt = A x + b for x = (n, m, k1..k12).
struct MomentSystem {
  MomentMatrix matrix_A;
  MomentVector vector_b;
  EffectiveParams params;
};

MomentSystem build_system(const EffectiveParams& params);

/// Coherences k1..k12, indexed from 1.
class Coherences {
 public:
  double operator[](int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  double& operator[](int i) { return values_.at(static_cast<std::size_t>(i - 1)); }

 private:
  std::array<double, 12> values_{};
};

struct SteadyState {
  double m_ss = 0.0;
  double n_ss = 0.0;
  double n_total_ss = 0.0;  // |alpha|^2 + n_ss
  Coherences k_ss;
  double lambda_cubed = 0.0;
  double mu_cubed = 0.0;

  /// Negative occupation: outside the physically meaningful region.
  bool unphysical() const { return m_ss < 0.0 || n_ss < 0.0; }

  MomentVector as_vector() const;
};

/// Solves A x + b = 0 with equilibration and one refinement step.
/// Throws SingularError when A is singular (e.g. g = 0 or gamma = 0).
SteadyState steady_state_linear(const MomentSystem& system);

/// Closed-form stationary values. Throws SingularError when lambda^3, mu^3,
/// omega, nu or g vanish.
SteadyState steady_state_closed(const EffectiveParams& params);

struct CoolingFit {
  double amplitude_a = 0.0;
  double gamma_eff = 0.0;  // 1/s, > 0 means cooling
  double m_ss = 0.0;

  double at(double t) const;
  bool stable() const { return gamma_eff > 0.0; }
};

/// Adiabatic-elimination description m(t) = a e^{-gamma_eff t} + m_ss.
CoolingFit cooling_rate(const EffectiveParams& params, double m0);

/// Eigenvalues of A.
std::vector<std::complex<double>> eigenvalues(const MomentSystem& system);

/// Eigenvalue of A carrying the relaxation of m: the one whose mode has the
/// largest participation factor in the m component.
std::complex<double> slow_eigenvalue(const MomentSystem& system);

/// Largest real part among the eigenvalues of A; > 0 means some moments grow.
double max_growth_rate(const MomentSystem& system);

/// exp(M) by Pade-13 scaling and squaring.
Eigen::MatrixXd expm(const Eigen::MatrixXd& M);

enum class EvolveMethod {
  MatrixExponential,  // exp of the augmented matrix [[A, b], [0, 0]]
  Integrator,         // adaptive Crank-Nicolson with Richardson extrapolation
};

struct EvolveOptions {
  EvolveMethod method = EvolveMethod::MatrixExponential;
  double rel_tol = 1e-10;  // integrator only
  double abs_tol = 0.0;    // integrator only; 0 picks rel_tol * max(1, |x0|)
  long max_steps = 50'000'000;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<MomentVector> states;
  /// Some eigenvalue of A has positive real part, or the values overflowed.
  bool divergent = false;

  double m(std::size_t i) const { return states[i][MomentIndex::m]; }
};

/// x(t) on a sorted, nonnegative grid starting from x0.
Trajectory evolve(const MomentSystem& system, const MomentState& x0,
                  std::span<const double> t_grid, const EvolveOptions& opts = {});

/// Bose-Einstein occupation of a mode of angular frequency `freq` at T.
double occupation_from_temperature(double freq, double temperature);

/// Inverse of occupation_from_temperature; occupation 0 maps to T = 0.
double temperature_from_occupation(double freq, double occupation);

}  // namespace cpcool
