#ifndef RELGROUP_REPORT_HPP
#define RELGROUP_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace relgroup {

// Tag for claims whose expected value comes from an independent computation
// rather than a stated result.
inline constexpr char const* kDerivedOracle = "derived-oracle";

struct Claim {
  std::string desc;
  std::string ref;  // a result locator, or kDerivedOracle
  nlohmann::json expected;
  nlohmann::json computed;
  bool pass = false;
};

struct ScenarioReport {
  std::string scenario;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Claim> claims;

  // Records a claim that passes iff computed == expected.
  Claim& check(std::string desc, std::string ref, nlohmann::json expected,
               nlohmann::json computed);
  // Records a claim with an explicit verdict.
  Claim& record(std::string desc, std::string ref, nlohmann::json expected,
                nlohmann::json computed, bool pass);

  bool all_pass() const;
  std::size_t failures() const;
  nlohmann::json to_json() const;
};

}  // namespace relgroup

#endif  // RELGROUP_REPORT_HPP
