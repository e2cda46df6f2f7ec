#include <cmath>
#include <string>

#include "cpcool/error.hpp"
#include "cpcool/kernels/closed_form_impl.hpp"
#include "cpcool/moment_dynamics.hpp"

namespace cpcool {

namespace {

SteadyState from_vector(const MomentVector& x, const EffectiveParams& p) {
  SteadyState s;
  s.n_ss = x[MomentIndex::n];
  s.m_ss = x[MomentIndex::m];
  s.n_total_ss = p.alpha_sq() + s.n_ss;
  for (int i = 1; i <= 12; ++i) s.k_ss[i] = x[MomentIndex::k(i)];
  const auto cf = kernels::closed_form<double>(p.omega, p.nu, p.g_coupling, p.gamma_cool, p.alpha_sq());
  s.lambda_cubed = cf.lambda3;
  s.mu_cubed = cf.mu3;
  return s;
}

[[noreturn]] void throw_singular(const EffectiveParams& p, const std::string& where) {
  std::string why;
  if (p.g_coupling == 0.0) {
    why = "g = 0 decouples the flexural mode";
  } else if (p.gamma_cool == 0.0) {
    why = "gamma = 0 removes all damping";
  } else if (p.nu == 0.0) {
    why = "nu = 0";
  } else if (p.omega == 0.0) {
    why = "omega = 0";
  } else if (p.alpha_sq() == 0.0) {
    why = "|alpha|^2 = 0 (no drive)";
  } else {
    why = "lambda^3 or mu^3 vanishes";
  }
  throw SingularError(where + ": singular parameters, " + why);
}

}  // namespace

MomentVector SteadyState::as_vector() const {
  MomentVector x;
  x[MomentIndex::n] = n_ss;
  x[MomentIndex::m] = m_ss;
  for (int i = 1; i <= 12; ++i) x[MomentIndex::k(i)] = k_ss[i];
  return x;
}

SteadyState steady_state_linear(const MomentSystem& system) {
  const MomentMatrix& A = system.matrix_A;

  // Row then column equilibration: rates in A span ~10 decades.
  MomentVector row_scale, col_scale;
  for (int i = 0; i < kMomentCount; ++i) {
    const double r = A.row(i).cwiseAbs().maxCoeff();
    if (r == 0.0) throw_singular(system.params, "steady_state_linear");
    row_scale[i] = 1.0 / r;
  }
  const MomentMatrix Ar = row_scale.asDiagonal() * A;
  for (int j = 0; j < kMomentCount; ++j) {
    const double c = Ar.col(j).cwiseAbs().maxCoeff();
    if (c == 0.0) throw_singular(system.params, "steady_state_linear");
    col_scale[j] = 1.0 / c;
  }
  const MomentMatrix As = Ar * col_scale.asDiagonal();

  // Condition numbers reach 1e16 over the physical range, so rank is judged
  // by the backward error of the refined solution, not by pivot size.
  Eigen::FullPivLU<MomentMatrix> lu(As);
  lu.setThreshold(0.0);
  if (!lu.isInvertible()) throw_singular(system.params, "steady_state_linear");

  const MomentVector rhs = -system.vector_b;
  MomentVector x = col_scale.asDiagonal() * lu.solve(row_scale.asDiagonal() * rhs);
  const MomentVector r = rhs - A * x;
  x += col_scale.asDiagonal() * lu.solve(row_scale.asDiagonal() * r);

  if (!x.allFinite()) throw_singular(system.params, "steady_state_linear");
  const MomentVector resid = (A * x - rhs).cwiseAbs();
  const double x_max = x.cwiseAbs().maxCoeff();
  for (int i = 0; i < kMomentCount; ++i)
    if (resid[i] > 1e-8 * (A.row(i).cwiseAbs().maxCoeff() * x_max + std::abs(rhs[i])))
      throw_singular(system.params, "steady_state_linear");
  return from_vector(x, system.params);
}

SteadyState steady_state_closed(const EffectiveParams& p) {
  if (p.g_coupling == 0.0 || p.nu == 0.0 || p.omega == 0.0) throw_singular(p, "steady_state_closed");
  const auto cf = kernels::closed_form<double>(p.omega, p.nu, p.g_coupling, p.gamma_cool, p.alpha_sq());
  if (cf.lambda3 == 0.0 || cf.mu3 == 0.0) throw_singular(p, "steady_state_closed");

  SteadyState s;
  s.n_ss = cf.n;
  s.m_ss = cf.m;
  s.n_total_ss = p.alpha_sq() + cf.n;
  for (int i = 1; i <= 12; ++i) s.k_ss[i] = cf.k[i];
  s.lambda_cubed = cf.lambda3;
  s.mu_cubed = cf.mu3;
  if (!std::isfinite(s.m_ss) || !std::isfinite(s.n_ss)) throw_singular(p, "steady_state_closed");
  return s;
}

double CoolingFit::at(double t) const { return amplitude_a * std::exp(-gamma_eff * t) + m_ss; }

CoolingFit cooling_rate(const EffectiveParams& p, double m0) {
  const double a = p.alpha_sq();
  if (p.g_coupling == 0.0 || p.nu == 0.0 || p.omega == 0.0 || a == 0.0)
    throw_singular(p, "cooling_rate");
  const auto cf = kernels::closed_form<double>(p.omega, p.nu, p.g_coupling, p.gamma_cool, a);
  const double amp =
      kernels::cooling_amplitude<double>(p.omega, p.nu, p.g_coupling, p.gamma_cool, a, m0);
  if (!std::isfinite(cf.gamma_eff) || !std::isfinite(amp) || cf.lambda3 == 0.0 || cf.mu3 == 0.0)
    throw_singular(p, "cooling_rate");
  return CoolingFit{amp, cf.gamma_eff, cf.m};
}

double occupation_from_temperature(double freq, double temperature) {
  if (!(freq > 0.0)) throw DomainError("occupation_from_temperature: frequency must be positive");
  if (temperature < 0.0) throw DomainError("occupation_from_temperature: negative temperature");
  if (temperature == 0.0) return 0.0;
  const double x = kConstants.hbar * freq / (kConstants.k_boltzmann * temperature);
  return 1.0 / std::expm1(x);
}

double temperature_from_occupation(double freq, double occupation) {
  if (!(freq > 0.0)) throw DomainError("temperature_from_occupation: frequency must be positive");
  if (occupation < 0.0) throw DomainError("temperature_from_occupation: negative occupation");
  if (occupation == 0.0) return 0.0;
  return kConstants.hbar * freq / (kConstants.k_boltzmann * std::log1p(1.0 / occupation));
}

}  // namespace cpcool
