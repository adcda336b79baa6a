// Python bindings. Structured results cross the boundary as JSON text and are
// decoded on the Python side, so reports match the CLI byte for byte.

#include "galstruct/error.hpp"
#include "galstruct/gruenberg.hpp"
#include "galstruct/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace galstruct;
using nlohmann::json;

namespace {

json orders_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_ll());
  return a;
}

std::pair<std::string, int> run_json(const std::string& config_text, std::optional<std::uint64_t> seed) {
  json j;
  try {
    j = json::parse(config_text);
  } catch (const json::parse_error& e) {
    throw Error("ConfigError", std::string("scenario: invalid JSON: ") + e.what());
  }
  ScenarioConfig c = parse_config(j);
  if (seed) c.seed = *seed;
  RunResult r = run_scenario(c);
  return {dump_report(r.report), r.exit_code};
}

std::string catalog_json() {
  json out = json::array();
  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    json e{{"name", name}, {"order", g->order()}};
    if (g->order() > 1) e["d"] = min_generators(*g).d;
    out.push_back(e);
  }
  return out.dump();
}

// Tate groups of Z or Z/m with a character action, degrees -1..2.
std::vector<long long> cohomology_orders(const std::string& group, long long order, const std::vector<long long>& units,
                                         int degree) {
  ScenarioConfig c;
  c.group_name = group;
  GroupPtr g = config_group(c);
  GModule m = module_from_spec(g, ModuleSpec{order, units}, "module");
  if (degree < -1 || degree > 2) throw Error("ConfigError", "degree: expected -1, 0, 1 or 2");
  std::vector<long long> out;
  const CohGroup h(m, degree);
  for (const auto& o : h.orders()) out.push_back(o.to_ll());
  return out;
}

std::string schanuel_json(const std::string& group, const std::vector<int>& a, const std::vector<int>& b) {
  ScenarioConfig c;
  c.group_name = group;
  GroupPtr g = config_group(c);
  SchanuelVerdict v = schanuel_check(g, a, b);
  return json{{"d_a", v.d_a},
              {"d_b", v.d_b},
              {"fingerprints_equal", v.fingerprints_equal()},
              {"difference", v.difference},
              {"iso", to_string(v.iso.outcome)}}
      .dump();
}

std::string relation_module_json(const std::string& group, const std::vector<int>& gens) {
  ScenarioConfig c;
  c.group_name = group;
  GroupPtr g = config_group(c);
  BetaData b = beta(g, gens);
  json checks = json::object();
  for (const auto& ck : b.checks.items()) checks[ck.name] = to_string(ck.status);
  return json{{"rank", b.rel.r.module.dim()},
              {"m", b.m},
              {"invariant_factors", orders_json(b.rel.r.module.invariant_factors())},
              {"checks", checks}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_galstruct, m) {
  m.doc() = "Explicit Galois-module constructions over small finite groups";

  static py::exception<Error> base(m, "GalstructError", PyExc_RuntimeError);
  static py::exception<Error> config(m, "ConfigError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      if (e.kind() == "ConfigError") py::set_error(config, e.what());
      else py::set_error(base, e.what());
    }
  });

  m.def("_run_json", &run_json, py::arg("config"), py::arg("seed") = py::none());
  m.def("_catalog_json", &catalog_json);
  m.def("_schanuel_json", &schanuel_json);
  m.def("_relation_module_json", &relation_module_json);
  m.def("cohomology_orders", &cohomology_orders, py::arg("group"), py::arg("order"), py::arg("units"),
        py::arg("degree"), "Orders of the cyclic factors of H^degree(G, Z/order), Tate in degrees -1 and 0");
  m.def("compute_n", &compute_n, py::arg("group_order"), py::arg("s_size"), py::arg("w") = 1);
  m.def("compute_n_prime", &compute_n_prime, py::arg("d"), py::arg("s_size"), py::arg("w") = 1);
  m.attr("EXIT_PASS") = int(kExitPass);
  m.attr("EXIT_CONFIG") = int(kExitConfig);
  m.attr("EXIT_UNKNOWN") = int(kExitUnknown);
  m.attr("EXIT_FAIL") = int(kExitFail);
}
