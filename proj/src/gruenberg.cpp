#include "galstruct/gruenberg.hpp"

#include "galstruct/error.hpp"

#include <algorithm>

namespace galstruct {

namespace {

std::string verdict_detail(const ExactVerdict& v) { return v.exact ? "" : v.node + " " + v.witness; }

// Coordinates of x - 1 in DeltaG (zero for x = 1).
Vec delta_coords(const GroupPtr& g, const LinearSolver& incl, int x) {
  const std::size_t n = g->order();
  Vec v = zero_vec(n);
  v[std::size_t(x)] += Integer(1);
  v[0] -= Integer(1);
  auto y = incl.solve(v);
  if (!y) throw Error("InternalError", "augmentation ideal does not contain g - 1");
  return *y;
}

Matrix solve_columns(const LinearSolver& s, const Matrix& rhs, const std::string& what) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    auto y = s.solve(rhs.column(c));
    if (!y) throw Error("CokernelNotFree", what + ": column " + std::to_string(c) + " has no preimage");
    cols.push_back(*y);
  }
  return Matrix::from_columns(s.unknowns(), cols);
}

bool is_bijective_map(const GMap& f) {
  return AbelianHom(f.source().moduli(), f.target().moduli(), f.matrix()).is_bijective();
}

}  // namespace

RelationData relation_module(const GroupPtr& g, const std::vector<int>& gens) {
  const int order = int(g->order());
  for (int x : gens)
    if (x <= 0 || x >= order)
      throw Error("NotGenerating", "generator " + std::to_string(x) + " is not a non-identity element");
  if (!generates(*g, gens)) throw Error("NotGenerating", "the elements do not generate G");

  RelationData rd;
  rd.generators = gens;
  const std::size_t d = gens.size();
  rd.free = regular_module(g, d);
  const GModule dg = augmentation_ideal(g);
  LinearSolver incl(augmentation_inclusion(g).matrix(), zero_vec(g->order()));
  Matrix a(dg.dim(), rd.free.dim());
  for (std::size_t k = 0; k < d; ++k) {
    const Vec base = delta_coords(g, incl, gens[k]);
    for (int h = 0; h < order; ++h) a.set_column(k * std::size_t(order) + std::size_t(h), dg.act(h, base));
  }
  rd.rel_map = GMap(rd.free, dg, a);
  if (!rd.rel_map.is_equivariant()) throw Error("InternalError", "relation map is not equivariant");
  rd.r = kernel(rd.rel_map);
  ExactVerdict v = check_exact({rd.r.inclusion, rd.rel_map});
  if (!v.exact) throw Error("InternalError", "relation sequence not exact at " + verdict_detail(v));
  return rd;
}

std::vector<int> full_enumeration(const GroupPtr& g, const std::vector<int>& gens) {
  std::vector<int> out = gens;
  for (int x = 1; x < int(g->order()); ++x)
    if (std::find(gens.begin(), gens.end(), x) == gens.end()) out.push_back(x);
  return out;
}

BetaData beta(const GroupPtr& g, const std::vector<int>& gens) {
  if (g->order() < 2) throw Error("InvalidScenario", "beta needs G != 1");
  BetaData bd;
  bd.rel = relation_module(g, gens);
  const std::vector<int> full = full_enumeration(g, gens);
  if (full.size() != g->order() - 1)
    throw Error("NotGenerating", "generators must be distinct");
  const std::size_t n = g->order();
  const std::size_t big = full.size();
  const std::size_t d = gens.size();
  bd.m = big - d;

  const GModule zg = regular_module(g);
  const GModule dg = augmentation_ideal(g);
  const GModule zg_dg = tensor(zg, dg);
  bd.delta_g2 = tensor(dg, dg);
  LinearSolver aug(augmentation_inclusion(g).matrix(), zero_vec(n));

  // Phi: ZG^{|G|-1} -> ZG (x) DeltaG, h e_k -> h (1 (x) (f_k - 1)), an isomorphism.
  Matrix phi(zg_dg.dim(), big * n);
  for (std::size_t k = 0; k < big; ++k) {
    const Vec one = tensor_element(zg, dg, unit_vec(n, 0), delta_coords(g, aug, full[k]));
    for (std::size_t h = 0; h < n; ++h) phi.set_column(k * n + h, zg_dg.act(int(h), one));
  }
  const GMap incl = tensor_map(augmentation_inclusion(g), identity_map(dg));
  LinearSolver incl_solver(incl.matrix(), zg_dg.moduli());
  LinearSolver phi_solver(phi, zg_dg.moduli());

  // beta: R_d -> ZG^d -> ZG^{|G|-1} -> ZG (x) DeltaG, landing in DeltaG (x) DeltaG
  Matrix r_in_big(big * n, bd.rel.r.module.dim());
  const Matrix& r_in_free = bd.rel.r.inclusion.matrix();
  for (std::size_t i = 0; i < r_in_free.rows(); ++i)
    for (std::size_t j = 0; j < r_in_free.cols(); ++j) r_in_big(i, j) = r_in_free(i, j);
  bd.beta = GMap(bd.rel.r.module, bd.delta_g2, solve_columns(incl_solver, phi * r_in_big, "beta"));

  // DeltaG (x) DeltaG -> ZG^{|G|-1} -> last m copies
  const Matrix pre = solve_columns(phi_solver, incl.matrix(), "Phi inverse");
  Matrix proj(bd.m * n, bd.delta_g2.dim());
  for (std::size_t i = 0; i < bd.m * n; ++i)
    for (std::size_t j = 0; j < proj.cols(); ++j) proj(i, j) = pre(d * n + i, j);
  bd.to_free = GMap(bd.delta_g2, regular_module(g, bd.m), proj);

  bd.checks.add("phi_bijective", AbelianHom(zero_vec(big * n), zg_dg.moduli(), phi).is_bijective());
  bd.checks.add("beta_equivariant", bd.beta.is_equivariant());
  bd.checks.add("to_free_equivariant", bd.to_free.is_equivariant());
  ExactVerdict v = check_exact({bd.beta, bd.to_free});
  bd.checks.add("beta_sequence_exact", v.exact, verdict_detail(v));
  bd.checks.add("beta_iso_iff_d_maximal", is_bijective_map(bd.beta) == (bd.m == 0));
  if (!bd.checks.all_pass()) {
    for (const auto& c : bd.checks.items())
      if (c.status != Status::Pass) throw Error("CokernelNotFree", c.name + " " + c.detail);
  }
  return bd;
}

BetaPrimeData beta_prime(const GroupPtr& g, const std::vector<int>& gens, const GSet& s) {
  BetaPrimeData bp;
  bp.b = beta(g, gens);
  const std::size_t n = g->order();
  const GModule dg = augmentation_ideal(g);
  const GModule ds = delta_s(s);
  const GModule& dg2 = bp.b.delta_g2;
  const GModule dg2_ds = tensor(dg2, ds);
  bp.source = tensor(bp.b.rel.r.module, ds);
  bp.l2 = tensor(dg, tensor(dg, ds));

  // (DeltaG (x) DeltaG) (x) DeltaS -> DeltaG (x) (DeltaG (x) DeltaS)
  const GModule l1 = tensor(dg, ds);
  Matrix assoc(bp.l2.dim(), dg2_ds.dim());
  for (std::size_t a = 0; a < dg.dim(); ++a)
    for (std::size_t b = 0; b < dg.dim(); ++b)
      for (std::size_t c = 0; c < ds.dim(); ++c) {
        const Vec src = tensor_element(dg2, ds, tensor_element(dg, dg, unit_vec(dg.dim(), a), unit_vec(dg.dim(), b)),
                                       unit_vec(ds.dim(), c));
        const Vec dst = tensor_element(dg, l1, unit_vec(dg.dim(), a),
                                       tensor_element(dg, ds, unit_vec(dg.dim(), b), unit_vec(ds.dim(), c)));
        for (std::size_t i = 0; i < src.size(); ++i)
          if (!src[i].is_zero()) assoc.set_column(i, dst);
      }
  const GMap assoc_map(dg2_ds, bp.l2, assoc);
  const GMap assoc_inv(bp.l2, dg2_ds, assoc.transpose());
  bp.beta_prime = compose(assoc_map, tensor_map(bp.b.beta, identity_map(ds)));
  const GMap to_free_tensor = tensor_map(bp.b.to_free, identity_map(ds));
  bp.to_free = compose(to_free_tensor, assoc_inv);

  // ZG^{m(|S|-1)} -> ZG^m (x) DeltaS, h e_(k,c) -> h (e_k (x) delta_c)
  const std::size_t sd = ds.dim();
  bp.cokernel_rank = bp.b.m * sd;
  const GModule free_m = regular_module(g, bp.b.m);
  const GModule& target = to_free_tensor.target();
  Matrix fi(target.dim(), bp.cokernel_rank * n);
  for (std::size_t k = 0; k < bp.b.m; ++k)
    for (std::size_t c = 0; c < sd; ++c) {
      const Vec one = tensor_element(free_m, ds, unit_vec(free_m.dim(), k * n), unit_vec(sd, c));
      for (std::size_t h = 0; h < n; ++h) fi.set_column((k * sd + c) * n + h, target.act(int(h), one));
    }
  bp.free_iso = GMap(regular_module(g, bp.cokernel_rank), target, fi);

  bp.checks.append(bp.b.checks, "beta.");
  bp.checks.add("associativity_equivariant", assoc_map.is_equivariant() && is_bijective_map(assoc_map));
  bp.checks.add("beta_prime_equivariant", bp.beta_prime.is_equivariant());
  ExactVerdict v = check_exact({bp.beta_prime, bp.to_free});
  bp.checks.add("beta_prime_sequence_exact", v.exact, verdict_detail(v));
  bp.checks.add("cokernel_free", bp.free_iso.is_equivariant() && is_bijective_map(bp.free_iso),
                "rank " + std::to_string(bp.cokernel_rank));
  if (!bp.checks.all_pass()) {
    for (const auto& c : bp.checks.items())
      if (c.status != Status::Pass) throw Error("CokernelNotFree", c.name + " " + c.detail);
  }
  return bp;
}

long long compute_n_prime(std::size_t d, std::size_t s_size, std::size_t w) {
  if (d < 1) throw Error("InvalidScenario", "n' is defined for G != 1");
  return (static_cast<long long>(d) - 1) * (static_cast<long long>(s_size) - 1) + static_cast<long long>(w);
}

MPrimeResult build_M_prime(const Scenario& sc, const TransportMaps& tm, const EpsilonTransport& t, const BigDiagram& d) {
  const GroupPtr& g = sc.group;
  const MinGenerators mg = min_generators(*g);
  MPrimeResult res;
  res.bp = beta_prime(g, mg.generators, sc.s);
  if (!same_module(res.bp.l2, sc.l2)) throw Error("InternalError", "L2 coordinates differ from the scenario");
  const GModule& w = sc.envelope.omega;

  CohGroup src(hom_module(w, res.bp.source), 1);
  res.beta_prime_star = induced(hom_right(w, res.bp.beta_prime), src, tm.h1_w_l2);
  const bool bij = res.beta_prime_star.is_bijective();
  res.checks.add("beta_prime_star_bijective", bij);
  if (!bij) throw Error("NotAnIsomorphism", "beta'_* is not bijective");
  res.class_coords = inverse(res.beta_prime_star)(t.eps_super1);

  const std::vector<Vec> bar = src.to_bar(src.lift(res.class_coords));
  res.ext = module_from_cocycle(res.bp.source, w, Cocycle1(bar.begin(), bar.end()));
  const Vec cls = extension_class(res.ext, src);
  res.checks.add("M_prime_class_is_preimage", cls == res.class_coords && res.beta_prime_star(cls) == t.eps_super1);

  const Pushout po = pushout(res.ext, res.bp.beta_prime);
  const auto phi = find_equivalence(po.ext, d.top);
  res.checks.add("pushout_equivalent_to_M", phi.has_value() && verify_equivalence(po.ext, d.top, *phi));
  if (!phi) return res;

  const GModule& mp = res.ext.M();
  const GModule& m = d.top.M();
  res.to_m = (*phi * po.from_middle.matrix()).reduce_rows(m.moduli());
  const GMap mid(mp, m, res.to_m);
  res.checks.add("middle_arrow_equivariant", mid.is_equivariant());
  const Quot q = cokernel(mid);
  ExactVerdict ve = check_exact({mid, q.projection});
  res.checks.add("M_prime_sequence_exact", ve.exact, verdict_detail(ve));
  // the cokernel of the middle arrow is L2 / beta'(R (x) DeltaS), free by beta_prime
  const GMap l2_to_q = compose(q.projection, d.top.i());
  ExactVerdict vq = check_exact({res.bp.beta_prime, l2_to_q});
  res.checks.add("middle_cokernel_free", vq.exact, "rank " + std::to_string(res.bp.cokernel_rank) + verdict_detail(vq));

  const std::size_t s_size = sc.s.size();
  res.n = compute_n(g->order(), s_size, sc.envelope.w);
  res.n_prime = compute_n_prime(mg.d, s_size, sc.envelope.w);
  res.checks.add("n_minus_n_prime", res.n - res.n_prime == static_cast<long long>(res.bp.cokernel_rank),
                 std::to_string(res.n) + " - " + std::to_string(res.n_prime));
  res.checks.add("rank_M_prime", m.free_rank() == mp.free_rank() + g->order() * res.bp.cokernel_rank);
  const std::string diff = fingerprint_difference(fingerprint(m), fingerprint(add_free(mp, res.bp.cokernel_rank)));
  res.checks.add("fingerprint_M_vs_padded_M_prime", diff.empty(), diff);
  if (res.bp.b.m == 0) res.checks.add("M_prime_is_M", is_isomorphism(mp, m, res.to_m));
  return res;
}

SchanuelVerdict schanuel_check(const GroupPtr& g, const std::vector<int>& gens_a, const std::vector<int>& gens_b,
                               const IsoEffort& effort) {
  RelationData a = relation_module(g, gens_a);
  RelationData b = relation_module(g, gens_b);
  if (a.generators.size() > b.generators.size()) std::swap(a, b);
  SchanuelVerdict v;
  v.d_a = a.generators.size();
  v.d_b = b.generators.size();
  const GModule padded = add_free(a.r.module, v.d_b - v.d_a);
  v.difference = fingerprint_difference(fingerprint(padded), fingerprint(b.r.module));
  if (v.difference.empty()) {
    v.iso = iso_search(padded, b.r.module, effort);
  } else {
    v.iso.outcome = IsoOutcome::NonIso;
    v.iso.witness = v.difference;
  }
  return v;
}

}  // namespace galstruct
