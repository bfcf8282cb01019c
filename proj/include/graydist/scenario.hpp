#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "graydist/laws.hpp"
#include "graydist/monads.hpp"
#include "graydist/report.hpp"
#include "json.hpp"

namespace graydist {

class ScenarioParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ScenarioResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SuiteRequest {
  std::string kind;
  std::string target;  // label used in merged tags
  nlohmann::json params;
};

struct Scenario {
  std::string name = "scenario";
  std::map<std::string, MonoidTable> monoids;
  std::map<std::string, std::uint32_t> sets;
  std::map<std::string, MonadData> monads;
  std::map<std::string, DistLawData> laws;
  std::map<std::string, NFoldSystem> nfold;
  std::vector<SuiteRequest> suites;
  std::uint32_t max_set_size = 3;
  std::string report;
};

// Throws ScenarioParseError on malformed JSON or fields and
// ScenarioResolutionError on unknown names or invalid parameters.
Scenario parse_scenario(const nlohmann::json& j);
Scenario load_scenario(const std::string& path);

// Runs every requested suite; tags are "kind:target/tag", sorted.
CheckReport run_scenario(const Scenario& s);

}  // namespace graydist
