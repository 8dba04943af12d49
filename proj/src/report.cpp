#include "relgroup/report.hpp"

#include <algorithm>

namespace relgroup {

Claim& ScenarioReport::check(std::string desc, std::string ref, nlohmann::json expected,
                             nlohmann::json computed) {
  bool const pass = expected == computed;
  return record(std::move(desc), std::move(ref), std::move(expected), std::move(computed),
                pass);
}

Claim& ScenarioReport::record(std::string desc, std::string ref, nlohmann::json expected,
                              nlohmann::json computed, bool pass) {
  claims.push_back({std::move(desc), std::move(ref), std::move(expected),
                    std::move(computed), pass});
  return claims.back();
}

bool ScenarioReport::all_pass() const { return failures() == 0; }

std::size_t ScenarioReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [](Claim const& c) { return !c.pass; }));
}

nlohmann::json ScenarioReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (auto const& c : claims) {
    rows.push_back({{"desc", c.desc},
                    {"ref", c.ref},
                    {"expected", c.expected},
                    {"computed", c.computed},
                    {"pass", c.pass}});
  }
  return {{"scenario", scenario}, {"params", params}, {"claims", std::move(rows)}};
}

}  // namespace relgroup
