#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "cpcool/casimir_polder.hpp"
#include "cpcool/membrane.hpp"
#include "cpcool/moment_dynamics.hpp"
#include "test_support.hpp"

using namespace cpcool;
using nlohmann::json;

namespace {

const std::string kGoldenPath = std::string(CPCOOL_GOLDEN_DIR) + "/red_point.json";

json compute() {
  const auto p = testsupport::red_point_params();
  const auto s = steady_state_closed(p);
  const auto fit = cooling_rate(p, occupation_from_temperature(p.nu, 300.0));
  json j;
  j["m_ss"] = s.m_ss;
  j["n_ss"] = s.n_ss;
  j["n_total_ss"] = s.n_total_ss;
  j["lambda_cubed"] = s.lambda_cubed;
  j["mu_cubed"] = s.mu_cubed;
  for (int i = 1; i <= 12; ++i) j["k" + std::to_string(i)] = s.k_ss[i];
  j["gamma_eff"] = fit.gamma_eff;
  j["amplitude_300K"] = fit.amplitude_a;
  j["gamma_cool"] = p.gamma_cool;
  j["omega"] = p.omega;
  j["xi_drive"] = p.xi_drive;
  j["alpha_sq"] = p.alpha_sq();
  j["sheet_nu_hz"] = fundamental_frequency(default_graphene_sheet()) / kTwoPi;
  j["c4_10um"] = effective_c4(rubidium87(), 10e-6);
  return j;
}

}  // namespace

TEST_CASE("red-point golden values") {
  const json now = compute();
  if (std::getenv("CPCOOL_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(kGoldenPath) << now.dump(2) << "\n";
    MESSAGE("golden file rewritten: " << kGoldenPath);
    return;
  }
  std::ifstream in(kGoldenPath);
  REQUIRE_MESSAGE(in.good(), "missing " << kGoldenPath);
  const json golden = json::parse(in);
  REQUIRE(golden.size() == now.size());
  for (const auto& [key, value] : golden.items()) {
    INFO(key);
    REQUIRE(now.contains(key));
    const double want = value.get<double>();
    const double got = now[key].get<double>();
    CHECK(std::abs(got - want) <= 1e-12 * std::abs(want));
  }
}
