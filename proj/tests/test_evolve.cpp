#include <doctest.h>

#include <cmath>
#include <vector>

#include "cpcool/error.hpp"
#include "cpcool/moment_dynamics.hpp"
#include "test_support.hpp"

using namespace cpcool;

namespace {

double max_rel(const MomentVector& a, const MomentVector& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max(1e-300, b.cwiseAbs().maxCoeff());
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> t{0.0};
  for (int i = 0; i < n; ++i) t.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return t;
}

}  // namespace

TEST_CASE("expm against closed forms") {
  SUBCASE("diagonal") {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
    d(0, 0) = -1.0;
    d(1, 1) = 2.0;
    d(2, 2) = -40.0;
    const auto e = expm(d);
    CHECK(e(0, 0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(e(1, 1) == doctest::Approx(std::exp(2.0)).epsilon(1e-14));
    CHECK(e(2, 2) == doctest::Approx(std::exp(-40.0)).epsilon(1e-12));
  }
  SUBCASE("rotation generator at several norms") {
    for (double th : {1e-3, 0.2, 0.9, 2.0, 5.0, 30.0, 1000.0}) {
      Eigen::MatrixXd r(2, 2);
      r << 0.0, -th, th, 0.0;
      const auto e = expm(r);
      INFO("theta = " << th);
      CHECK(e(0, 0) == doctest::Approx(std::cos(th)).epsilon(1e-12).scale(1.0));
      CHECK(e(1, 0) == doctest::Approx(std::sin(th)).epsilon(1e-12).scale(1.0));
    }
  }
  SUBCASE("nilpotent") {
    Eigen::MatrixXd n = Eigen::MatrixXd::Zero(3, 3);
    n(0, 1) = 1.0;
    n(1, 2) = 1.0;
    const auto e = expm(n);
    CHECK(e(0, 2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(e(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("fixed point stays fixed") {
  const auto p = testsupport::stable_params();
  const auto sys = build_system(p);
  CHECK(max_growth_rate(sys) < 0.0);
  const auto ss = steady_state_linear(sys);
  const auto grid = log_grid(1e-3, 50.0, 30);
  const auto traj = evolve(sys, MomentState(ss.as_vector()), grid);
  CHECK_FALSE(traj.divergent);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(max_rel(traj.states[i], ss.as_vector()) < 1e-8);
}

TEST_CASE("stable trajectories relax to the steady state") {
  const auto p = testsupport::stable_params();
  const auto sys = build_system(p);
  const auto ss = steady_state_linear(sys);
  const double rate = -max_growth_rate(sys);
  const std::vector<double> grid{0.0, 60.0 / rate};
  const auto traj = evolve(sys, MomentState::from_occupations(0.0, 1000.0), grid);
  CHECK(traj.m(0) == 1000.0);
  CHECK(std::abs(traj.m(1) - ss.m_ss) < 1e-12 * 1000.0 + 1e-9);
}

TEST_CASE("matrix exponential and integrator agree") {
  SUBCASE("stable parameter set, t up to 2 s") {
    const auto p = testsupport::stable_params();
    const auto sys = build_system(p);
    const auto grid = log_grid(1e-4, 2.0, 25);
    const auto x0 = MomentState::from_occupations(0.0, 50.0);
    const auto a = evolve(sys, x0, grid);
    const auto b = evolve(sys, x0, grid, EvolveOptions{.method = EvolveMethod::Integrator});
    for (std::size_t i = 0; i < grid.size(); ++i) {
      INFO("t = " << grid[i]);
      CHECK(max_rel(a.states[i], b.states[i]) < 1e-6);
    }
  }
  SUBCASE("red point, first two microseconds") {
    const auto p = testsupport::red_point_params();
    const auto sys = build_system(p);
    const auto grid = log_grid(1e-9, 2e-6, 12);
    const auto x0 = MomentState::from_occupations(0.0, occupation_from_temperature(p.nu, 300.0));
    const auto a = evolve(sys, x0, grid);
    const auto b = evolve(sys, x0, grid, EvolveOptions{.method = EvolveMethod::Integrator});
    CHECK(a.divergent);
    CHECK(b.divergent);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      INFO("t = " << grid[i]);
      CHECK(max_rel(a.states[i], b.states[i]) < 1e-6);
    }
  }
}

TEST_CASE("singular A needs no inverse") {
  auto p = testsupport::red_point_params();
  p = make_effective_params(p.omega, p.xi_drive, 0.0, p.gamma_cool, p.nu);
  const auto sys = build_system(p);
  const std::vector<double> grid{0.0, 1e-7, 1e-6};
  const auto traj = evolve(sys, MomentState::from_occupations(0.0, 7.0), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(traj.m(i) == doctest::Approx(7.0).epsilon(1e-12));
}

TEST_CASE("grid validation") {
  const auto sys = build_system(testsupport::stable_params());
  const std::vector<double> unsorted{0.0, 2.0, 1.0};
  const std::vector<double> negative{-1.0, 0.0};
  CHECK_THROWS_AS(evolve(sys, MomentState(), unsorted), DomainError);
  CHECK_THROWS_AS(evolve(sys, MomentState(), negative), DomainError);
  CHECK(evolve(sys, MomentState(), std::vector<double>{}).states.empty());
}

TEST_CASE("red-point divergence is flagged") {
  const auto sys = build_system(testsupport::red_point_params());
  CHECK(max_growth_rate(sys) > 0.0);
  const std::vector<double> grid{0.0, 2.0};
  const auto traj = evolve(sys, MomentState::from_occupations(0.0, 1.0), grid);
  CHECK(traj.divergent);
  CHECK(traj.states.size() == 2);
}
