// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic only.
// Usage: acceptance <scenario dir>

#include "../oracle/bar_oracle.hpp"
#include "../unit/helpers.hpp"

#include "galstruct/error.hpp"
#include "galstruct/gruenberg.hpp"
#include "galstruct/report.hpp"
#include "galstruct/shapiro.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace galstruct;
using namespace testing_helpers;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool ok = true;
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void require(bool cond, const std::string& what) {
    ++checks;
    if (!cond) {
      ok = false;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
};

struct CorpusRun {
  std::string file;
  ScenarioConfig config;
  RunResult result;
};

std::vector<CorpusRun> run_corpus(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusRun> out;
  for (const auto& f : files) {
    ScenarioConfig c = load_config(f.string());
    out.push_back({f.filename().string(), c, run_scenario(c)});
  }
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Every check of `suite` whose name ends in one of `suffixes` must pass, and
// each suffix must occur at least once.
void require_suite(Verdict& v, const CorpusRun& run, const std::string& suite, const std::vector<std::string>& suffixes) {
  const json& items = run.result.report["suites"][suite];
  for (const auto& suffix : suffixes) {
    std::size_t seen = 0;
    for (const auto& c : items) {
      const std::string name = c["name"].get<std::string>();
      if (!ends_with(name, suffix)) continue;
      ++seen;
      v.require(c["status"] == "pass", run.file + ": " + suite + "." + name);
    }
    v.require(seen > 0, run.file + ": no " + suite + " check named *" + suffix);
  }
}

// An AbelianHom between finite groups is bijective, checked by enumeration:
// equal invariant factors, trivial kernel and every target element hit.
bool exhaustively_bijective(const AbelianHom& f) {
  const Integer src = oracle::product(f.source_orders()), dst = oracle::product(f.target_orders());
  if (src != dst) return false;
  Vec a = f.source_orders(), b = f.target_orders();
  if (Subquotient(Lattice::full(a.size()), relation_vectors(a)).orders() !=
      Subquotient(Lattice::full(b.size()), relation_vectors(b)).orders())
    return false;
  std::set<Vec> image;
  for (const Vec& x : enumerate_elements(f.source_orders())) {
    const Vec y = f(x);
    if (is_zero(y) && !is_zero(x)) return false;
    image.insert(y);
  }
  return Integer(static_cast<long long>(image.size())) == dst;
}

// Tate H^0 of a lattice straight from the definition: fixed points over norms.
Vec tate0_direct(const GModule& m) {
  const std::size_t n = m.group()->order(), d = m.dim();
  std::vector<Matrix> blocks;
  for (std::size_t g = 0; g < n; ++g) blocks.push_back(m.action(int(g)) - Matrix::identity(d));
  const Lattice fixed = kernel_lattice(Matrix::vstack(blocks), Vec(n * d, Integer(0)));
  Matrix norm(d, d);
  for (std::size_t g = 0; g < n; ++g) norm = norm + m.action(int(g));
  std::vector<Vec> norms;
  for (std::size_t j = 0; j < d; ++j) norms.push_back(norm.column(j));
  return Subquotient(fixed, norms).orders();
}

// -------------------------------------------------------------------- criteria

Verdict criterion1() {
  Verdict v;
  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    if (g->order() == 1) continue;
    for (std::size_t k = 1; k <= 3; ++k)
      for (int r : {-1, 0, 1, 2})
        v.require(CohGroup(regular_module(g, k), r).is_trivial(),
                  name + ": H^" + std::to_string(r) + "(ZG^" + std::to_string(k) + ") != 0");
  }
  auto c2 = catalog_group("C2");
  const GModule z = trivial_module(c2), zminus = sign_module(c2, 0, {1});
  v.require(CohGroup(z, 0).orders() == Vec{Integer(2)}, "H^0(C2, Z) != Z/2");
  v.require(tate0_direct(z) == Vec{Integer(2)}, "oracle: fixed/norm of Z is not Z/2");
  v.require(CohGroup(zminus, 1).orders() == Vec{Integer(2)}, "H^1(C2, Z-) != Z/2");
  v.require(oracle::bar_cohomology(zminus, 1) == Vec{Integer(2)}, "oracle: bar H^1(C2, Z-) is not Z/2");
  // finite coefficients by brute-force enumeration of cochains
  for (const GModule& m : {sign_module(c2, 4, {1}), cyclic_module(c2, 6, {1, 1})}) {
    v.require(CohGroup(m, 1).order() == Integer(static_cast<long long>(oracle::enumerate_h1(m))),
              "H^1 differs from enumeration on " + describe(m));
    v.require(CohGroup(m, 0).order() == Integer(static_cast<long long>(oracle::enumerate_h0(m))),
              "H^0 differs from enumeration on " + describe(m));
  }
  return v;
}

Verdict criterion2(const std::vector<CorpusRun>& corpus) {
  Verdict v;
  for (const auto& run : corpus) {
    Scenario sc = realize(run.config);
    TransportMaps tm = prepare_transport(sc);
    v.require(exhaustively_bijective(tm.d1), run.file + ": d1 not bijective");
    v.require(exhaustively_bijective(tm.delta0), run.file + ": delta0 not bijective");
    v.require(exhaustively_bijective(tm.d0_prime), run.file + ": d0' not bijective");
    EpsilonSpace es = epsilon_space(sc);
    TheoremReport rep = theorem_check(sc, tm, es, {}, run.config.seed, true);
    for (const auto& o : rep.per_eps) {
      v.require(o.linkage.has_value(), run.file + ": no linkage data");
      if (o.linkage) v.require(exhaustively_bijective(o.linkage->d_c), run.file + ": d_C not bijective");
    }
  }
  return v;
}

Verdict criterion3() {
  Verdict v;
  for (const char* name : {"A", "B"}) {
    Scenario sc = named_scenario(name);
    const GModule& x = sc.l2;
    const GModule& y = sc.envelope.omega;
    const CohGroup h1 = extension_group(y, x);
    const GModule hom = hom_module(y, x);
    const auto classes = enumerate_elements(h1.orders());
    v.require(!classes.empty(), std::string(name) + ": empty H^1");
    for (const Vec& cls : classes) {
      const Cocycle1 c = h1.to_bar(h1.lift(cls));
      const ZSplitExt e = module_from_cocycle(x, y, c);
      v.require(extension_class(e, h1) == cls, std::string(name) + ": round trip fails at " + to_string(cls));
      // a cohomologous cocycle c + delta(b) for each basis vector b
      for (std::size_t k = 0; k < hom.dim(); ++k) {
        const Vec b = unit_vec(hom.dim(), k);
        Cocycle1 c2;
        for (std::size_t g = 0; g < c.size(); ++g) c2.push_back(hom.reduce(c[g] + hom.act(int(g), b) - b));
        const ZSplitExt e2 = module_from_cocycle(x, y, c2);
        auto phi = find_equivalence(e, e2);
        v.require(phi.has_value() && verify_equivalence(e, e2, *phi),
                  std::string(name) + ": no equivalence for a cohomologous cocycle");
      }
    }
  }
  return v;
}

Verdict criterion4(const std::vector<CorpusRun>& corpus) {
  Verdict v;
  for (const auto& run : corpus) {
    require_suite(v, run, "theorem",
                  {"extension_class_is_minus_delta0_h", "explicit_cocycles_pointwise_equal",
                   "explicit_cocycles_same_class", "eps_to_eps_super1_injective"});
    const json& r = run.result.report;
    v.require(r["epsilon"].size() == r["cohomology"]["characters"].get<std::size_t>(),
              run.file + ": not every character was run");
    std::set<std::string> supers;
    for (const auto& e : r["epsilon"]) supers.insert(e["eps_super1"].dump());
    v.require(supers.size() == r["epsilon"].size(), run.file + ": two characters share eps^(1)");
  }
  return v;
}

Verdict criterion5(const std::vector<CorpusRun>& corpus) {
  Verdict v;
  for (const auto& run : corpus) {
    Scenario sc = realize(run.config);
    TransportMaps tm = prepare_transport(sc);
    EpsilonSpace es = epsilon_space(sc);
    Character zero = es.characters.front();
    for (auto& q : zero.values) q = QmodZ();
    EpsilonTransport t = transport(sc, tm, zero);
    BigDiagram d = build_M(sc, t);
    const GModule hom = hom_module(sc.envelope.omega, sc.l2);
    const ZSplitExt split =
        module_from_cocycle(sc.l2, sc.envelope.omega, Cocycle1(sc.group->order(), zero_vec(hom.dim())));
    auto phi = find_equivalence(split, d.top);
    v.require(phi.has_value(), run.file + ": no isomorphism L2 + omega -> M(0)");
    if (!phi) continue;
    v.require(verify_equivalence(split, d.top, *phi), run.file + ": equivalence does not verify");
    v.require(GMap(split.M(), d.top.M(), *phi).is_equivariant(), run.file + ": phi not equivariant");
    require_suite(v, run, "theorem", {"split_case_isomorphism"});
  }
  return v;
}

Verdict criterion6(const std::vector<CorpusRun>& corpus) {
  Verdict v;
  for (const auto& run : corpus)
    require_suite(v, run, "linkage", {"middle_column_cohomologically_trivial", "d_C_bijective", "linked_to_eps1_orbit"});
  return v;
}

Verdict criterion7(const std::vector<CorpusRun>& corpus) {
  Verdict v;
  v.require(compute_n(6, 4, 1) == 13, "n(6, 4, 1) != 13");
  v.require(compute_n_prime(2, 4, 1) == 4, "n'(S3, 4, 1) != 4");
  for (const auto& run : corpus) {
    require_suite(v, run, "corollary",
                  {"beta_prime.cokernel_free", "beta_prime_star_bijective", "pushout_equivalent_to_M",
                   "fingerprint_M_vs_padded_M_prime", "n_minus_n_prime", "M_prime_sequence_exact"});
    const json& r = run.result.report;
    const std::size_t g = r["scenario"]["group"]["order"].get<std::size_t>();
    const std::size_t s = r["scenario"]["s_size"].get<std::size_t>();
    const std::size_t w = r["counts"]["w"].get<std::size_t>(), d = r["counts"]["d"].get<std::size_t>();
    v.require(r["counts"]["n"].get<long long>() == compute_n(g, s, w), run.file + ": n");
    v.require(r["counts"]["n_prime"].get<long long>() == compute_n_prime(d, s, w), run.file + ": n'");
    for (const auto& e : r["epsilon"])
      v.require(e["corollary"]["cokernel_rank"].get<std::size_t>() == (g - 1 - d) * (s - 1),
                run.file + ": cokernel rank");
    if (g == 2) require_suite(v, run, "corollary", {"M_prime_is_M"});
  }
  // beta' rank beyond the corpus: S3 on a point plus its natural action
  auto s3 = catalog_group("S3");
  std::vector<std::vector<int>> act;
  for (const auto& p : s3_perms()) act.push_back({0, p[0] + 1, p[1] + 1, p[2] + 1});
  BetaPrimeData bp = beta_prime(s3, min_generators(*s3).generators, GSet(s3, act));
  v.require(bp.cokernel_rank == 9, "beta' cokernel rank for S3, |S| = 4");
  for (const auto& c : bp.checks.items()) v.require(c.status == Status::Pass, "S3 |S|=4: " + c.name);
  return v;
}

Verdict criterion8(const std::vector<CorpusRun>& corpus) {
  Verdict v;
  std::size_t nontrivial = 0;
  for (const auto& c : shapiro_matrix()) {
    CoinducedModule ci = coinduce(c.s.stabilizer(c.p), c.b);
    for (const GModule& d : {permutation_module(c.s), delta_s(c.s), trivial_module(c.s.group())})
      for (int r = 0; r <= 2; ++r) {
        ShapiroMap sm = shapiro(d, ci, r);
        v.require(sm.orders_equal && sm.bijective, c.label + ": Shapiro degree " + std::to_string(r));
      }
    ShapiroSplitting res = shapiro_splitting(c.s, c.p, c.b, true);
    for (const auto& ck : res.checks.items()) v.require(ck.status == Status::Pass, c.label + ": " + ck.name);
    if (!res.sh_ds.source.is_trivial()) ++nontrivial;
  }
  v.require(nontrivial >= 2, "fewer than two cases with nonzero H^2");
  for (const auto& run : corpus)
    require_suite(v, run, "lemma45",
                  {"shapiro_degree_0", "shapiro_degree_1", "shapiro_degree_2", "square_commutes",
                   "lambda_after_a_is_identity", "a_star_s_is_identity"});

  // rotating the transversal by a stabilizer element changes nothing
  auto s3 = catalog_group("S3");
  GSet nat(s3, s3_perms());
  Subgroup st = nat.stabilizer(0);
  GModule b = cyclic_module(st.as_group(), 4, {1, -1});
  CoinducedModule c1 = coinduce(st, b);
  const int h = st.members()[1];
  std::vector<int> t2{0};
  for (std::size_t k = c1.transversal.size(); k-- > 1;) t2.push_back(s3->mul(c1.transversal[k], h));
  CoinducedModule c2 = coinduce(st, b, t2);
  GMap ch = transversal_change(c1, c2), cho = orbit_product_change(c1, c2);
  v.require(ch.is_equivariant() && cho.is_equivariant(), "rotation: change maps not equivariant");
  v.require(compose(c2.identification, ch).matrix() == compose(cho, c1.identification).matrix(),
            "rotation: identifications disagree");
  const GModule ds = delta_s(nat);
  for (int r = 0; r <= 2; ++r) {
    ShapiroMap s1 = shapiro(ds, c1, r), s2 = shapiro(ds, c2, r);
    AbelianHom lhs = compose(s2.map, induced(hom_right(ds, ch), s1.source, s2.source));
    for (const Vec& x : enumerate_elements(s1.source.orders()))
      v.require(lhs(x) == s1.map(x), "rotation: Shapiro maps differ in degree " + std::to_string(r));
  }
  return v;
}

// Generating sets of distinct non-identity elements with at most k elements.
std::vector<std::vector<int>> generating_sets(const GroupPtr& g, std::size_t k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (!cur.empty() && generates(*g, cur)) out.push_back(cur);
    if (cur.size() == k) return;
    for (int x = start; x < int(g->order()); ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

Verdict criterion9() {
  Verdict v;
  for (const char* name : {"C2xC2", "S3"}) {
    auto g = catalog_group(name);
    const std::size_t n = g->order();
    const auto sets = generating_sets(g, 3);
    for (const auto& gens : sets) {
      const std::string tag = std::string(name) + " gens " + to_string(Vec(gens.begin(), gens.end()));
      BetaData b = beta(g, gens);
      for (const auto& c : b.checks.items()) v.require(c.status == Status::Pass, tag + ": " + c.name);
      v.require(b.rel.r.module.dim() == gens.size() * n - (n - 1), tag + ": rank of R_d");
      const SmithForm sf = smith_form(b.beta.matrix());
      bool unit = true;
      for (std::size_t i = 0; i < sf.rank; ++i) unit = unit && sf.diagonal[i] == Integer(1);
      v.require(unit && b.beta.matrix().rows() - sf.rank == b.m * n, tag + ": cokernel of beta not free of rank m|G|");
    }
    // one set of S per group for the tensored sequence
    GSet s = std::string(name) == "S3" ? GSet(g, s3_perms()) : GSet(g, {{0, 1, 2}, {0, 2, 1}, {0, 1, 2}, {0, 2, 1}});
    for (const auto& gens : sets) {
      BetaPrimeData bp = beta_prime(g, gens, s);
      v.require(bp.cokernel_rank == (n - 1 - gens.size()) * (s.size() - 1), std::string(name) + ": beta' cokernel rank");
      for (const auto& c : bp.checks.items()) v.require(c.status == Status::Pass, std::string(name) + ": " + c.name);
    }
    const auto mg = min_generators(*g).generators;
    for (const auto& other : sets) {
      SchanuelVerdict sv = schanuel_check(g, mg, other);
      v.require(sv.fingerprints_equal(), std::string(name) + ": Schanuel fingerprints differ: " + sv.difference);
      v.require(sv.iso.outcome != IsoOutcome::NonIso, std::string(name) + ": Schanuel pair proven non-isomorphic");
    }
  }
  return v;
}

Verdict criterion10(const std::string& dir, const std::vector<CorpusRun>& first) {
  Verdict v;
  const auto second = run_corpus(dir);
  v.require(first.size() == second.size() && first.size() >= 5, "corpus has fewer than five scenarios");
  for (std::size_t i = 0; i < std::min(first.size(), second.size()); ++i)
    v.require(dump_report(first[i].result.report) == dump_report(second[i].result.report),
              first[i].file + ": reports differ between runs");
  for (const auto& run : first) v.require(run.result.exit_code == kExitPass, run.file + ": exit code");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <scenario dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  std::vector<CorpusRun> corpus;
  try {
    corpus = run_corpus(dir);
  } catch (const std::exception& e) {
    std::cerr << "cannot run corpus: " << e.what() << "\n";
    return 1;
  }

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"Tate cohomology engine and oracles", criterion1},
      {"connecting maps are bijective", [&] { return criterion2(corpus); }},
      {"extension classes and cocycles", criterion3},
      {"main identity for every character", [&] { return criterion4(corpus); }},
      {"split case", [&] { return criterion5(corpus); }},
      {"linkage of the middle column", [&] { return criterion6(corpus); }},
      {"corollary module M'", [&] { return criterion7(corpus); }},
      {"Shapiro splitting", [&] { return criterion8(corpus); }},
      {"relation modules and Schanuel", criterion9},
      {"determinism", [&] { return criterion10(dir, corpus); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.ok = false;
      v.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << (i + 1) << ": " << (v.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << v.checks << " checks)\n";
    for (const auto& f : v.failures) std::cout << "    " << f << "\n";
    failed += !v.ok;
  }
  std::cout << (failed ? "FAILED " : "all passed") << (failed ? std::to_string(failed) : "") << "\n";
  return failed ? 1 : 0;
}
