#include "galstruct/report.hpp"

#include "galstruct/error.hpp"
#include "galstruct/gruenberg.hpp"
#include "galstruct/shapiro.hpp"

#include <algorithm>
#include <chrono>

namespace galstruct {

using nlohmann::json;

namespace {

json int_json(const Integer& x) {
  const std::string s = x.str();
  if (s.size() < 18) return json(x.to_ll());
  return json(s);
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

json char_json(const Character& c) {
  json a = json::array();
  for (const auto& q : c.values) a.push_back(q.str());
  return a;
}

json checks_json(const CheckList& cl) {
  json a = json::array();
  for (const auto& c : cl.items()) {
    json e{{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    a.push_back(e);
  }
  return a;
}

json module_json(const GModule& m) {
  return json{{"description", describe(m)}, {"dim", m.dim()}, {"free_rank", m.free_rank()},
              {"invariant_factors", vec_json(m.invariant_factors())}};
}

json iso_json(const IsoVerdict& v) {
  json j{{"outcome", to_string(v.outcome)}, {"candidates_tried", v.candidates_tried}};
  if (!v.witness.empty()) j["witness"] = v.witness;
  return j;
}

json gens_json(const std::vector<int>& g) { return json(g); }

bool is_linkage_check(const std::string& name) {
  for (const char* k : {"middle_column_cohomologically_trivial", "d_C_bijective", "linked_to_eps1_orbit"})
    if (name.size() >= std::string(k).size() && name.compare(name.size() - std::string(k).size(), std::string::npos, k) == 0)
      return true;
  return false;
}

class Phases {
public:
  explicit Phases(const PhaseTimer& t) : timer_(t), start_(std::chrono::steady_clock::now()) {}
  void mark(const std::string& name) {
    const auto now = std::chrono::steady_clock::now();
    if (timer_) timer_(name, std::chrono::duration<double>(now - start_).count());
    start_ = now;
  }

private:
  const PhaseTimer& timer_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<std::pair<std::vector<int>, std::vector<int>>> default_schanuel_pairs(const GroupPtr& g) {
  const std::vector<int> mg = min_generators(*g).generators;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  // another minimal generating set: the lexicographically last one
  const int n = int(g->order());
  std::vector<int> best, cur;
  std::function<void(int)> rec = [&](int start) {
    if (cur.size() == mg.size()) {
      if (generates(*g, cur)) best = cur;
      return;
    }
    for (int x = start; x < n; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
  if (!best.empty() && best != mg) out.emplace_back(mg, best);
  const std::vector<int> full = full_enumeration(g, mg);
  if (full.size() > mg.size()) out.emplace_back(mg, full);
  if (out.empty()) out.emplace_back(mg, mg);
  return out;
}

}  // namespace

int exit_code_for(const CheckList& checks) {
  if (checks.any_fail()) return kExitFail;
  if (checks.any_unknown()) return kExitUnknown;
  return kExitPass;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

RunResult run_scenario(const ScenarioConfig& c, const PhaseTimer& timer) {
  Phases phases(timer);
  const Scenario sc = realize(c);
  const GroupPtr& g = sc.group;
  const MinGenerators mg = min_generators(*g);
  auto has = [&](const char* s) { return std::find(c.checks.begin(), c.checks.end(), s) != c.checks.end(); };
  phases.mark("setup");

  RunResult rr;
  json& rep = rr.report;
  rep["scenario"] = json{{"name", c.name},
                         {"group", json{{"name", g->name()}, {"order", g->order()}, {"min_generators", gens_json(mg.generators)}}},
                         {"s_size", sc.s.size()},
                         {"orbits", sc.s.orbits()},
                         {"mu", json{{"order", c.mu.order}, {"units", c.mu.units}}},
                         {"seed", c.seed},
                         {"checks_requested", c.checks}};
  const Envelope& env = sc.envelope;
  rep["envelope"] = json{{"strategy", env.strategy}, {"base", env.base}, {"w", env.w},
                         {"omega", module_json(env.omega)}, {"omega_bar", module_json(env.omega_bar)},
                         {"class", vec_json(env.class_coords)}, {"tried", env.tried}};
  const std::size_t m = g->order() - 1 - mg.d;
  const long long n = compute_n(g->order(), sc.s.size(), env.w);
  const long long np = compute_n_prime(mg.d, sc.s.size(), env.w);
  rep["counts"] = json{{"n", n}, {"n_prime", np}, {"w", env.w}, {"d", mg.d}, {"m", m},
                       {"rank_L1", sc.l1.dim()}, {"rank_L2", sc.l2.dim()}};
  rep["conventions"] = json{
      {"hom_action", "(g f)(x) = g f(g^-1 x)"},
      {"cocycle", "c(gh) = c(g) + g c(h)"},
      {"tensor_action", "diagonal"},
      {"section", "s(y) = (-1 (x) h(y), y) in (ZG (x) L1) + omega"},
      {"extension_class", "class of g -> g s g^-1 - s"},
      {"connecting_map", "lift along the surjection, coboundary, pull back"},
      {"trace_dual", "[h]*(g) = trace(hbar g) / |G|"},
      {"basis_DeltaG", "g - 1 for g != 1, element order"},
      {"basis_DeltaS", "p - p0 for p != p0"},
      {"tensor_coordinates", "pairs (i, j), i-major, modulus gcd"},
      {"regular_module", "ZG^k coordinate copy * |G| + g"},
      {"fractions", "p/q with 0 <= p < q"}};

  const EpsilonSpace es = epsilon_space(sc);
  const TransportMaps tm = prepare_transport(sc);
  rep["cohomology"] = json{{"H2_Hom_DeltaS_mu", vec_json(tm.h2_ds_mu.orders())},
                           {"H1_Hom_L1_mu", vec_json(tm.h1_l1_mu.orders())},
                           {"H0_Hom_L1_omegabar", vec_json(tm.h0_l1_wbar.orders())},
                           {"H0_Hom_omega_L1", vec_json(tm.h0_w_l1.orders())},
                           {"H1_Hom_omega_L2", vec_json(tm.h1_w_l2.orders())},
                           {"characters", es.characters.size()}};
  phases.mark("transport");

  std::vector<std::size_t> idx;
  if (c.epsilon) {
    if (*c.epsilon >= es.characters.size())
      throw Error("ConfigError", "epsilon: index " + std::to_string(*c.epsilon) + " out of range (" +
                                     std::to_string(es.characters.size()) + " characters)");
    idx.push_back(*c.epsilon);
  }

  json suites = json::object();
  json eps_rep = json::array();
  if (has("theorem") || has("linkage") || has("corollary")) {
    const TheoremReport tr = theorem_check(sc, tm, es, idx, c.seed, has("linkage"));
    phases.mark("theorem");
    CheckList theorem, link;
    theorem.append(tm.checks, "transport.");
    for (const auto& ck : tr.checks.items()) (is_linkage_check(ck.name) ? link : theorem).append_one(ck);
    if (has("theorem")) {
      suites["theorem"] = checks_json(theorem);
      rr.checks.append(theorem, "theorem.");
    }
    if (has("linkage")) {
      suites["linkage"] = checks_json(link);
      rr.checks.append(link, "linkage.");
    }
    CheckList cor;
    for (std::size_t k = 0; k < tr.per_eps.size(); ++k) {
      const TheoremOutcome& o = tr.per_eps[k];
      const std::size_t index = idx.empty() ? k : idx[k];
      json e{{"index", index},
             {"eps", char_json(o.transport.eps)},
             {"eps1", char_json(o.transport.eps1)},
             {"eps0", char_json(o.transport.eps0)},
             {"h_class", vec_json(o.transport.h_class)},
             {"eps_super1", vec_json(o.transport.eps_super1)},
             {"M", module_json(o.diagram.m.module)}};
      if (o.linkage) {
        json orbit = json::array();
        for (const auto& ch : o.linkage->orbit) orbit.push_back(char_json(ch));
        e["linkage"] = json{{"chi", char_json(o.linkage->chi)}, {"orbit", orbit}};
      }
      const bool zero = std::all_of(o.transport.eps.values.begin(), o.transport.eps.values.end(),
                                    [](const QmodZ& q) { return q.is_zero(); });
      if (zero && has("theorem")) {
        const GModule split = direct_sum(g, {sc.l2, env.omega}).module;
        e["split_iso_search"] = iso_json(iso_search(o.diagram.m.module, split, c.effort));
      }
      if (has("corollary")) {
        const MPrimeResult mp = build_M_prime(sc, tm, o.transport, o.diagram);
        const std::string pre = "eps[" + std::to_string(index) + "].";
        cor.append(mp.bp.checks, pre + "beta_prime.");
        cor.append(mp.checks, pre);
        json cj{{"M_prime", module_json(mp.ext.M())}, {"class", vec_json(mp.class_coords)},
                {"cokernel_rank", mp.bp.cokernel_rank}};
        cj["stable_iso_search"] = iso_json(stable_iso_check(o.diagram.m.module, mp.ext.M(), 0, mp.bp.cokernel_rank, c.effort));
        e["corollary"] = cj;
      }
      eps_rep.push_back(e);
    }
    if (has("corollary")) {
      suites["corollary"] = checks_json(cor);
      rr.checks.append(cor, "corollary.");
      phases.mark("corollary");
    }
  }
  rep["epsilon"] = eps_rep;

  json extra = json::object();
  if (has("lemma45")) {
    std::vector<SplittingSpec> specs = c.lemma45;
    if (specs.empty())
      for (const auto& orbit : sc.s.orbits()) specs.push_back({orbit.front(), std::nullopt});
    CheckList lc;
    json entries = json::array();
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const Subgroup h = sc.s.stabilizer(specs[i].point);
      const GModule b = specs[i].b ? module_from_spec(h.as_group(), *specs[i].b, "lemma45[" + std::to_string(i) + "].b")
                                   : restrict_module(sc.mu, h);
      const ShapiroSplitting r = shapiro_splitting(sc.s, specs[i].point, b, true);
      lc.append(r.checks, "p" + std::to_string(specs[i].point) + "[" + std::to_string(i) + "].");
      for (int deg = 0; deg <= 2; ++deg) {
        const ShapiroMap sz = shapiro(permutation_module(sc.s), r.ci, deg);
        const ShapiroMap sd = shapiro(sc.delta_s, r.ci, deg);
        lc.add("p" + std::to_string(specs[i].point) + "[" + std::to_string(i) + "].shapiro_degree_" + std::to_string(deg),
               sz.bijective && sd.bijective);
      }
      entries.push_back(json{{"point", specs[i].point},
                             {"stabilizer", h.members()},
                             {"B", module_json(b)},
                             {"H2_Hom_DeltaS_coind", vec_json(r.sh_ds.source.orders())},
                             {"H2_Hom_ZS_coind", vec_json(r.sh_zs.source.orders())}});
    }
    suites["lemma45"] = checks_json(lc);
    rr.checks.append(lc, "lemma45.");
    extra["lemma45"] = entries;
    phases.mark("lemma45");
  }
  if (has("schanuel")) {
    auto pairs = c.schanuel.empty() ? default_schanuel_pairs(g) : c.schanuel;
    CheckList sck;
    json entries = json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::string pre = "pair[" + std::to_string(i) + "].";
      for (const auto* gens : {&pairs[i].first, &pairs[i].second}) {
        const BetaData b = beta(g, *gens);
        std::string tag = "[";
        for (std::size_t k = 0; k < gens->size(); ++k) tag += (k ? "," : "") + std::to_string((*gens)[k]);
        sck.append(b.checks, pre + "gens" + tag + "].");
      }
      const SchanuelVerdict v = schanuel_check(g, pairs[i].first, pairs[i].second, c.effort);
      sck.add(pre + "fingerprints_equal", v.fingerprints_equal(), v.difference);
      entries.push_back(json{{"gens_a", pairs[i].first}, {"gens_b", pairs[i].second}, {"d_a", v.d_a}, {"d_b", v.d_b},
                             {"iso_search", iso_json(v.iso)}});
    }
    suites["schanuel"] = checks_json(sck);
    rr.checks.append(sck, "schanuel.");
    extra["schanuel"] = entries;
    phases.mark("schanuel");
  }
  if (has("triplehom")) {
    const ShortExact top{delta_s_inclusion(sc.s), permutation_augmentation(sc.s)};
    const ShortExact bottom{env.j, env.q};
    const HomOfPairs hp = hom_of_pairs(top, bottom);
    CheckList tc;
    const ExactVerdict v = check_exact({hp.to_pairs, hp.difference});
    tc.add("module_sequence_exact", v.exact, v.exact ? "" : v.node + " " + v.witness);
    suites["triplehom"] = checks_json(tc);
    rr.checks.append(tc, "triplehom.");
    extra["triplehom"] = json{{"bottom", "envelope 0 -> mu -> omega -> omega_bar -> 0"},
                              {"H2_triples", vec_json(hp.h2_triples.orders())},
                              {"H2_pairs", vec_json(hp.h2_pairs.orders())},
                              {"H2_right", vec_json(hp.h2_right.orders())},
                              {"h2_sequence", json{{"injective", hp.h2_sequence.injective},
                                                   {"middle", hp.h2_sequence.middle},
                                                   {"surjective", hp.h2_sequence.surjective}}}};
    phases.mark("triplehom");
  }
  rep["suites"] = suites;
  rep["details"] = extra;

  std::size_t pass = 0, fail = 0, unknown = 0;
  for (const auto& ck : rr.checks.items()) {
    if (ck.status == Status::Pass) ++pass;
    else if (ck.status == Status::Fail) ++fail;
    else ++unknown;
  }
  rr.exit_code = exit_code_for(rr.checks);
  rep["summary"] = json{{"pass", pass}, {"fail", fail}, {"unknown", unknown},
                        {"status", rr.exit_code == kExitPass ? "pass" : rr.exit_code == kExitFail ? "fail" : "unknown"},
                        {"exit_code", rr.exit_code}};
  return rr;
}

}  // namespace galstruct
