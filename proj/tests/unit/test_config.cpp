#include "doctest.h"

#include "galstruct/error.hpp"
#include "galstruct/report.hpp"

#include <string>

using namespace galstruct;
using nlohmann::json;

namespace {

json base() {
  return json::parse(R"({
    "name": "t",
    "group": "C2",
    "gset": [[0, 1, 2], [0, 2, 1]],
    "mu": {"order": 3, "units": [1, -1]},
    "envelope": {"strategy": "coprime"},
    "checks": ["theorem", "linkage"],
    "seed": 9
  })");
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

// The ConfigError message for a config, or "" if it realizes.
std::string config_failure(const json& j) {
  try {
    realize(parse_config(j));
    return "";
  } catch (const Error& e) {
    CHECK(e.kind() == "ConfigError");
    const std::string msg = e.what();
    CHECK(starts_with(msg, "ConfigError: "));
    return msg.substr(std::string("ConfigError: ").size());
  }
}

}  // namespace

TEST_CASE("a valid config parses and round-trips") {
  ScenarioConfig c = parse_config(base());
  CHECK(c.group_name == "C2");
  CHECK(c.seed == 9);
  CHECK(c.checks == std::vector<std::string>{"linkage", "theorem"});
  ScenarioConfig again = parse_config(config_to_json(c));
  CHECK(config_to_json(again) == config_to_json(c));
  CHECK(config_failure(base()).empty());
}

TEST_CASE("malformed action tables name the offending entry") {
  json j = base();
  j["gset"][1][2] = 5;
  CHECK(starts_with(config_failure(j), "gset[1][2]"));

  j = base();
  j["gset"][1] = {0, 2};
  CHECK(starts_with(config_failure(j), "gset[1]"));

  j = base();
  j["gset"][1] = {0, 1, 1};  // not a permutation
  CHECK(starts_with(config_failure(j), "gset"));

  j = base();
  j["gset"] = {{0, 1, 2}};
  CHECK(starts_with(config_failure(j), "gset"));

  j = base();
  j["gset"][0][1] = "x";
  CHECK_THROWS_WITH(parse_config(j), doctest::Contains("gset[0][1]"));
}

TEST_CASE("other invalid entries") {
  json j = base();
  j["mu"]["units"] = {1};
  CHECK(starts_with(config_failure(j), "mu.units"));

  j = base();
  j["mu"]["units"] = {1, 0};  // 0 is not a unit mod 3
  CHECK(starts_with(config_failure(j), "mu"));

  j = base();
  j["group"] = "C7";
  CHECK(starts_with(config_failure(j), "group"));

  j = base();
  j["colour"] = "red";
  CHECK_THROWS_WITH(parse_config(j), doctest::Contains("colour: unknown key"));

  j = base();
  j["checks"] = {"theorem", "everything"};
  CHECK_THROWS_WITH(parse_config(j), doctest::Contains("checks[1]"));

  j = base();
  j["envelope"]["strategy"] = "guess";
  CHECK_THROWS_WITH(parse_config(j), doctest::Contains("envelope.strategy"));

  j = base();
  j["group"] = json{{"table", {{0, 1}, {1, 1}}}};
  CHECK(starts_with(config_failure(j), "group.table"));
}

TEST_CASE("reports are deterministic and exit codes follow the checks") {
  ScenarioConfig c = parse_config(base());
  RunResult a = run_scenario(c), b = run_scenario(c);
  CHECK(dump_report(a.report) == dump_report(b.report));
  CHECK(a.exit_code == kExitPass);
  CHECK(a.report["summary"]["status"] == "pass");
  CHECK(a.report["suites"].contains("theorem"));
  CHECK_FALSE(a.report["suites"].contains("schanuel"));

  CheckList cl;
  cl.add("x", true);
  CHECK(exit_code_for(cl) == kExitPass);
  cl.append_one({"y", Status::Unknown, ""});
  CHECK(exit_code_for(cl) == kExitUnknown);
  cl.add("z", false);
  CHECK(exit_code_for(cl) == kExitFail);
}
