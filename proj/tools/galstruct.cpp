// galstruct: run scenario files, list the catalogs, or check the shipped corpus.

#include "galstruct/error.hpp"
#include "galstruct/extensions.hpp"
#include "galstruct/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#ifndef GALSTRUCT_SCENARIO_DIR
#define GALSTRUCT_SCENARIO_DIR "scenarios"
#endif

using namespace galstruct;
namespace fs = std::filesystem;

namespace {

int severity(int code) {
  switch (code) {
    case kExitFail: return 3;
    case kExitConfig: return 2;
    case kExitUnknown: return 1;
    default: return 0;
  }
}

int worse(int a, int b) { return severity(a) >= severity(b) ? a : b; }

PhaseTimer stderr_timer(bool on) {
  if (!on) return {};
  return [](const std::string& phase, double s) {
    std::cerr << "  " << std::left << std::setw(10) << phase << std::fixed << std::setprecision(3) << s << " s\n";
  };
}

int run_one(const std::string& path, const std::string& out, std::optional<std::uint64_t> seed, bool timings) {
  try {
    ScenarioConfig c = load_config(path);
    if (seed) c.seed = *seed;
    RunResult r = run_scenario(c, stderr_timer(timings));
    const std::string text = dump_report(r.report);
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out);
      if (!f) {
        std::cerr << "cannot write " << out << "\n";
        return kExitConfig;
      }
      f << text;
    }
    for (const auto& ck : r.checks.items())
      if (ck.status != Status::Pass) std::cerr << to_string(ck.status) << ": " << ck.name << " " << ck.detail << "\n";
    return r.exit_code;
  } catch (const Error& e) {
    if (e.kind() == "ConfigError") {
      std::cerr << e.what() << "\n";
      return kExitConfig;
    }
    std::cerr << "internal failure: " << e.what() << "\n";
    return kExitFail;
  }
}

std::vector<fs::path> corpus_files(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit Galois-module constructions from group cohomology"};
  app.require_subcommand(1);

  std::string scenario, out;
  std::uint64_t seed = 0;
  bool timings = false;
  auto* run = app.add_subcommand("run", "Run one scenario file and print its report");
  run->add_option("--scenario", scenario, "Scenario JSON file")->required();
  run->add_option("--out", out, "Write the report here instead of stdout");
  auto* seed_opt = run->add_option("--seed", seed, "Override the scenario seed");
  run->add_flag("--timings", timings, "Print phase timings to stderr");

  bool list = false;
  auto* cat = app.add_subcommand("catalog", "Show the group and envelope catalogs");
  cat->add_flag("--list", list, "List entries");

  std::string corpus = GALSTRUCT_SCENARIO_DIR, out_dir;
  auto* self = app.add_subcommand("selftest", "Run every scenario of the corpus");
  self->add_option("--corpus", corpus, "Directory of scenario files");
  self->add_option("--out-dir", out_dir, "Write one report per scenario here");
  self->add_flag("--timings", timings, "Print phase timings to stderr");

  CLI11_PARSE(app, argc, argv);

  if (*run) {
    std::optional<std::uint64_t> s;
    if (seed_opt->count()) s = seed;
    return run_one(scenario, out, s, timings);
  }
  if (*cat) {
    std::cout << "groups:\n";
    for (const auto& name : catalog_names()) {
      auto g = catalog_group(name);
      std::cout << "  " << std::left << std::setw(6) << name << " order " << g->order();
      if (g->order() > 1) std::cout << "  d " << min_generators(*g).d;
      std::cout << "\n";
    }
    std::cout << "envelope strategies: coprime search presentation\n";
    std::cout << "envelope catalog: DeltaG DeltaG_dual DeltaG_x_DeltaS Z+DeltaG Z+DeltaG_dual ZS\n";
    std::cout << "check suites:";
    for (const auto& k : known_checks()) std::cout << " " << k;
    std::cout << "\n";
    return kExitPass;
  }
  if (*self) {
    if (!fs::is_directory(corpus)) {
      std::cerr << "config error: corpus directory " << corpus << " not found\n";
      return kExitConfig;
    }
    if (!out_dir.empty()) fs::create_directories(out_dir);
    int code = kExitPass;
    for (const auto& f : corpus_files(corpus)) {
      const std::string target = out_dir.empty() ? "" : (fs::path(out_dir) / f.filename()).string();
      std::ofstream sink;
      int c;
      if (target.empty()) {
        // discard the report, keep the verdict
        std::streambuf* old = std::cout.rdbuf(nullptr);
        c = run_one(f.string(), "", std::nullopt, timings);
        std::cout.rdbuf(old);
      } else {
        c = run_one(f.string(), target, std::nullopt, timings);
      }
      const char* verdict = c == kExitPass ? "pass" : c == kExitUnknown ? "unknown" : c == kExitConfig ? "config-error" : "fail";
      std::cout << std::left << std::setw(28) << f.filename().string() << verdict << "\n";
      code = worse(code, c);
    }
    return code;
  }
  return kExitPass;
}
