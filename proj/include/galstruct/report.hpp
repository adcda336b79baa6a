#pragma once

// Running a scenario's check suites and assembling the JSON report.
// Reports are deterministic in (config, seed): keys are sorted, fractions are
// "p/q" strings and no timings are included.

#include "galstruct/config.hpp"

#include <functional>
#include <json.hpp>

namespace galstruct {

enum ExitCode { kExitPass = 0, kExitConfig = 1, kExitUnknown = 2, kExitFail = 3 };

struct RunResult {
  nlohmann::json report;
  CheckList checks;  // every check, prefixed by suite
  int exit_code = kExitPass;
};

// Optional phase timer callback (phase name, seconds); never part of the report.
using PhaseTimer = std::function<void(const std::string&, double)>;

// Throws Error("ConfigError") for invalid data.
RunResult run_scenario(const ScenarioConfig& c, const PhaseTimer& timer = {});

int exit_code_for(const CheckList& checks);
std::string dump_report(const nlohmann::json& report);

}  // namespace galstruct
