#pragma once

// Scenario files: JSON description of (G, S, mu, envelope, checks) and its
// realization as a Scenario. Every validation failure is Error("ConfigError")
// whose message starts with the offending entry, e.g. "gset[1][2]: ...".

#include "galstruct/construction.hpp"
#include "galstruct/isotest.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace galstruct {

struct ModuleSpec {
  long long order = 0;         // 0 = Z
  std::vector<long long> units;  // one per group element
};

struct SplittingSpec {
  int point = 0;
  std::optional<ModuleSpec> b;  // over the stabilizer, units per member; default: res mu
};

struct ScenarioConfig {
  std::string name;
  std::string group_name;                     // catalog name, or "" for a table
  std::vector<std::vector<int>> cayley;       // used when group_name is empty
  std::vector<std::vector<int>> gset;
  ModuleSpec mu;
  std::string envelope_strategy = "search";
  std::size_t w = 1;
  std::vector<std::string> envelope_catalog;  // empty = default catalog
  std::optional<std::size_t> epsilon;         // empty = all
  std::vector<std::string> checks;
  std::uint64_t seed = 0;
  IsoEffort effort;
  std::vector<SplittingSpec> lemma45;           // empty = one entry per orbit with B = res mu
  std::vector<std::pair<std::vector<int>, std::vector<int>>> schanuel;  // empty = defaults
};

const std::vector<std::string>& known_checks();

ScenarioConfig parse_config(const nlohmann::json& j);
ScenarioConfig load_config(const std::string& path);
nlohmann::json config_to_json(const ScenarioConfig& c);

GroupPtr config_group(const ScenarioConfig& c);
GModule module_from_spec(const GroupPtr& g, const ModuleSpec& s, const std::string& where);
// Builds G, S, mu and the envelope; errors in the data become ConfigError.
Scenario realize(const ScenarioConfig& c);

}  // namespace galstruct
