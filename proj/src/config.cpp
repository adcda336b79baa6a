#include "galstruct/config.hpp"

#include "galstruct/error.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace galstruct {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& where, const std::string& what) {
  throw Error("ConfigError", where + ": " + what);
}

long long get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) config_error(where, "expected an integer");
  return j.get<long long>();
}

std::size_t get_size(const json& j, const std::string& where) {
  const long long v = get_int(j, where);
  if (v < 0) config_error(where, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

std::vector<int> get_int_list(const json& j, const std::string& where) {
  if (!j.is_array()) config_error(where, "expected a list of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int(get_int(j[i], where + "[" + std::to_string(i) + "]")));
  return out;
}

std::vector<std::vector<int>> get_table(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) config_error(where, "expected a non-empty list of rows");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_int_list(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

void check_keys(const json& j, const std::string& where, const std::set<std::string>& allowed) {
  if (!j.is_object()) config_error(where.empty() ? "scenario" : where, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) config_error(where.empty() ? it.key() : where + "." + it.key(), "unknown key");
}

ModuleSpec get_module(const json& j, const std::string& where) {
  check_keys(j, where, {"order", "units"});
  if (!j.contains("order")) config_error(where + ".order", "missing");
  if (!j.contains("units")) config_error(where + ".units", "missing");
  ModuleSpec m;
  m.order = get_int(j["order"], where + ".order");
  const auto u = get_int_list(j["units"], where + ".units");
  m.units.assign(u.begin(), u.end());
  return m;
}

json module_json(const ModuleSpec& m) { return json{{"order", m.order}, {"units", m.units}}; }

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> k{"corollary", "lemma45", "linkage", "schanuel", "theorem", "triplehom"};
  return k;
}

ScenarioConfig parse_config(const json& j) {
  check_keys(j, "", {"name", "group", "gset", "mu", "envelope", "epsilon", "checks", "seed", "effort", "lemma45",
                     "schanuel", "description"});
  ScenarioConfig c;
  if (j.contains("name")) {
    if (!j["name"].is_string()) config_error("name", "expected a string");
    c.name = j["name"].get<std::string>();
  }
  if (!j.contains("group")) config_error("group", "missing");
  const json& g = j["group"];
  if (g.is_string()) {
    c.group_name = g.get<std::string>();
  } else {
    check_keys(g, "group", {"table"});
    if (!g.contains("table")) config_error("group.table", "missing");
    c.cayley = get_table(g["table"], "group.table");
  }
  if (!j.contains("gset")) config_error("gset", "missing");
  c.gset = get_table(j["gset"], "gset");
  if (!j.contains("mu")) config_error("mu", "missing");
  c.mu = get_module(j["mu"], "mu");

  if (j.contains("envelope")) {
    const json& e = j["envelope"];
    check_keys(e, "envelope", {"strategy", "w", "catalog"});
    if (e.contains("strategy")) {
      if (!e["strategy"].is_string()) config_error("envelope.strategy", "expected a string");
      c.envelope_strategy = e["strategy"].get<std::string>();
    }
    if (e.contains("w")) c.w = get_size(e["w"], "envelope.w");
    if (e.contains("catalog")) {
      if (!e["catalog"].is_array()) config_error("envelope.catalog", "expected a list of names");
      for (std::size_t i = 0; i < e["catalog"].size(); ++i) {
        if (!e["catalog"][i].is_string()) config_error("envelope.catalog[" + std::to_string(i) + "]", "expected a string");
        c.envelope_catalog.push_back(e["catalog"][i].get<std::string>());
      }
    }
  }
  static const std::set<std::string> strategies{"coprime", "search", "presentation"};
  if (!strategies.count(c.envelope_strategy))
    config_error("envelope.strategy", "unknown strategy '" + c.envelope_strategy + "'");
  if (c.w < 1) config_error("envelope.w", "w must be at least 1");

  if (j.contains("epsilon")) {
    const json& e = j["epsilon"];
    if (e.is_string()) {
      if (e.get<std::string>() != "all") config_error("epsilon", "expected \"all\" or an index");
    } else {
      c.epsilon = get_size(e, "epsilon");
    }
  }
  if (j.contains("checks")) {
    const json& k = j["checks"];
    if (k.is_string() && k.get<std::string>() == "all") {
      c.checks = known_checks();
    } else {
      if (!k.is_array()) config_error("checks", "expected \"all\" or a list of suite names");
      for (std::size_t i = 0; i < k.size(); ++i) {
        const std::string where = "checks[" + std::to_string(i) + "]";
        if (!k[i].is_string()) config_error(where, "expected a string");
        const std::string s = k[i].get<std::string>();
        if (std::find(known_checks().begin(), known_checks().end(), s) == known_checks().end())
          config_error(where, "unknown suite '" + s + "'");
        c.checks.push_back(s);
      }
    }
  } else {
    c.checks = known_checks();
  }
  std::sort(c.checks.begin(), c.checks.end());
  c.checks.erase(std::unique(c.checks.begin(), c.checks.end()), c.checks.end());

  if (j.contains("seed")) c.seed = get_size(j["seed"], "seed");
  if (j.contains("effort")) {
    const json& e = j["effort"];
    check_keys(e, "effort", {"coefficient_bound", "max_rank", "max_candidates"});
    if (e.contains("coefficient_bound")) c.effort.coefficient_bound = int(get_size(e["coefficient_bound"], "effort.coefficient_bound"));
    if (e.contains("max_rank")) c.effort.max_rank = get_size(e["max_rank"], "effort.max_rank");
    if (e.contains("max_candidates")) c.effort.max_candidates = get_size(e["max_candidates"], "effort.max_candidates");
  }
  if (j.contains("lemma45")) {
    const json& l = j["lemma45"];
    if (!l.is_array()) config_error("lemma45", "expected a list");
    for (std::size_t i = 0; i < l.size(); ++i) {
      const std::string where = "lemma45[" + std::to_string(i) + "]";
      check_keys(l[i], where, {"point", "b"});
      if (!l[i].contains("point")) config_error(where + ".point", "missing");
      SplittingSpec s;
      s.point = int(get_size(l[i]["point"], where + ".point"));
      if (l[i].contains("b")) s.b = get_module(l[i]["b"], where + ".b");
      c.lemma45.push_back(s);
    }
  }
  if (j.contains("schanuel")) {
    const json& s = j["schanuel"];
    if (!s.is_array()) config_error("schanuel", "expected a list of pairs");
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string where = "schanuel[" + std::to_string(i) + "]";
      if (!s[i].is_array() || s[i].size() != 2) config_error(where, "expected a pair of generator lists");
      c.schanuel.emplace_back(get_int_list(s[i][0], where + "[0]"), get_int_list(s[i][1], where + "[1]"));
    }
  }
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error(path, "cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    config_error(path, std::string("invalid JSON: ") + e.what());
  }
  return parse_config(j);
}

json config_to_json(const ScenarioConfig& c) {
  json j;
  j["name"] = c.name;
  if (!c.group_name.empty()) j["group"] = c.group_name;
  else j["group"] = json{{"table", c.cayley}};
  j["gset"] = c.gset;
  j["mu"] = module_json(c.mu);
  j["envelope"] = json{{"strategy", c.envelope_strategy}, {"w", c.w}, {"catalog", c.envelope_catalog}};
  if (c.epsilon) j["epsilon"] = *c.epsilon;
  else j["epsilon"] = "all";
  j["checks"] = c.checks;
  j["seed"] = c.seed;
  j["effort"] = json{{"coefficient_bound", c.effort.coefficient_bound}, {"max_rank", c.effort.max_rank},
                     {"max_candidates", c.effort.max_candidates}};
  json l = json::array();
  for (const auto& s : c.lemma45) {
    json e{{"point", s.point}};
    if (s.b) e["b"] = module_json(*s.b);
    l.push_back(e);
  }
  j["lemma45"] = l;
  json sch = json::array();
  for (const auto& [a, b] : c.schanuel) sch.push_back(json::array({a, b}));
  j["schanuel"] = sch;
  return j;
}

GroupPtr config_group(const ScenarioConfig& c) {
  if (!c.group_name.empty()) {
    const auto names = catalog_names();
    if (std::find(names.begin(), names.end(), c.group_name) == names.end())
      config_error("group", "unknown catalog group '" + c.group_name + "'");
    return catalog_group(c.group_name);
  }
  try {
    return FiniteGroup::from_table(c.cayley, "table");
  } catch (const Error& e) {
    config_error("group.table", e.what());
  }
}

GModule module_from_spec(const GroupPtr& g, const ModuleSpec& s, const std::string& where) {
  if (s.order < 0 || s.order == 1) config_error(where + ".order", "order must be 0 (Z) or at least 2");
  if (s.units.size() != g->order())
    config_error(where + ".units", "expected " + std::to_string(g->order()) + " entries, got " + std::to_string(s.units.size()));
  std::vector<Integer> u(s.units.begin(), s.units.end());
  try {
    return cyclic_module(g, Integer(s.order), u);
  } catch (const Error& e) {
    config_error(where + ".units", e.what());
  }
}

Scenario realize(const ScenarioConfig& c) {
  const GroupPtr g = config_group(c);
  if (g->order() < 2) config_error("group", "the group must be nontrivial");
  if (c.gset.size() != g->order())
    config_error("gset", "expected " + std::to_string(g->order()) + " rows, got " + std::to_string(c.gset.size()));
  const std::size_t npts = c.gset[0].size();
  if (npts < 2) config_error("gset[0]", "S needs at least two points");
  for (std::size_t i = 0; i < c.gset.size(); ++i) {
    if (c.gset[i].size() != npts)
      config_error("gset[" + std::to_string(i) + "]", "row has " + std::to_string(c.gset[i].size()) + " entries, expected " + std::to_string(npts));
    for (std::size_t k = 0; k < npts; ++k)
      if (c.gset[i][k] < 0 || std::size_t(c.gset[i][k]) >= npts)
        config_error("gset[" + std::to_string(i) + "][" + std::to_string(k) + "]",
                     "point " + std::to_string(c.gset[i][k]) + " out of range");
  }
  std::optional<GSet> s;
  try {
    s.emplace(g, c.gset);
  } catch (const Error& e) {
    config_error("gset", e.what());
  }
  if (c.mu.order < 2) config_error("mu.order", "mu must have order at least 2");
  const GModule mu = module_from_spec(g, c.mu, "mu");

  std::vector<CatalogLattice> catalog;
  try {
    catalog = c.envelope_catalog.empty() ? default_envelope_catalog(g, *s) : select_catalog(g, *s, c.envelope_catalog);
  } catch (const Error& e) {
    config_error("envelope.catalog", e.what());
  }
  Envelope env;
  try {
    env = build_envelope(mu, c.envelope_strategy, c.w, catalog);
  } catch (const Error& e) {
    config_error("envelope", e.what());
  }
  for (const auto& l : c.lemma45)
    if (std::size_t(l.point) >= npts) config_error("lemma45.point", "point " + std::to_string(l.point) + " out of range");
  for (std::size_t i = 0; i < c.schanuel.size(); ++i)
    for (const auto* gens : {&c.schanuel[i].first, &c.schanuel[i].second})
      if (std::any_of(gens->begin(), gens->end(), [&](int x) { return x <= 0 || std::size_t(x) >= g->order(); }) ||
          !generates(*g, *gens))
        config_error("schanuel[" + std::to_string(i) + "]", "not a generating set of non-identity elements");
  return make_scenario(g, *s, mu, env);
}

}  // namespace galstruct
