#include "galstruct/construction.hpp"

#include "galstruct/error.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace galstruct {

namespace {

bool same_map(const Matrix& a, const Matrix& b, const Vec& target_moduli) {
  return a.reduce_rows(target_moduli) == b.reduce_rows(target_moduli);
}

// Coordinates in a submodule of vectors lying in it.
Matrix sub_coordinates(const LinearSolver& solver, const Sub& s, const Matrix& vecs, const std::string& what) {
  Matrix out(s.module.dim(), vecs.cols());
  for (std::size_t c = 0; c < vecs.cols(); ++c) {
    auto x = solver.solve(vecs.column(c));
    if (!x) throw Error("DiagramFailure", what + ": column " + std::to_string(c) + " leaves the kernel");
    out.set_column(c, s.module.reduce(*x));
  }
  return out;
}

}  // namespace

Scenario make_scenario(GroupPtr g, GSet s, GModule mu, Envelope env) {
  if (g->order() < 2) throw Error("InvalidScenario", "the group must be nontrivial");
  if (!same_group(*s.group(), *g) || !same_group(*mu.group(), *g)) throw Error("GroupMismatch", "scenario data over different groups");
  if (mu.dim() != 1 || mu.moduli()[0] < Integer(2)) throw Error("InvalidScenario", "mu must be cyclic of order >= 2");
  if (!same_module(env.mu, mu)) throw Error("InvalidScenario", "envelope is not an envelope of mu");
  Scenario sc{g, std::move(s), std::move(mu), std::move(env), {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  const GModule zg = regular_module(g);
  sc.delta_g = augmentation_ideal(g);
  sc.delta_s = delta_s(sc.s);
  sc.l1 = tensor(sc.delta_g, sc.delta_s);
  sc.l2 = tensor(sc.delta_g, sc.l1);
  sc.zg_ds = tensor(zg, sc.delta_s);
  sc.zg_l1 = tensor(zg, sc.l1);
  sc.l1_incl = tensor_map(augmentation_inclusion(g), identity_map(sc.delta_s));
  sc.zg_ds_proj = GMap(sc.zg_ds, sc.delta_s, tensor_map(augmentation_map(g), identity_map(sc.delta_s)).matrix());
  sc.l2_incl = tensor_map(augmentation_inclusion(g), identity_map(sc.l1));
  sc.p1 = GMap(sc.zg_l1, sc.l1, tensor_map(augmentation_map(g), identity_map(sc.l1)).matrix());
  sc.one_tensor = Matrix(sc.zg_l1.dim(), sc.l1.dim());
  for (std::size_t k = 0; k < sc.l1.dim(); ++k)
    sc.one_tensor.set_column(k, tensor_element(zg, sc.l1, unit_vec(g->order(), 0), unit_vec(sc.l1.dim(), k)));
  return sc;
}

EpsilonSpace epsilon_space(const Scenario& sc) {
  EpsilonSpace es{CohGroup(hom_module(sc.delta_s, sc.mu), 2), {}};
  es.characters = character_group(es.h2.orders());
  return es;
}

TransportMaps prepare_transport(const Scenario& sc) {
  const Envelope& env = sc.envelope;
  const GModule& w = env.omega;
  TransportMaps tm;
  tm.h2_ds_mu = CohGroup(hom_module(sc.delta_s, sc.mu), 2);
  tm.h1_l1_mu = CohGroup(hom_module(sc.l1, sc.mu), 1);
  tm.h0_l1_wbar = CohGroup(hom_module(sc.l1, env.omega_bar), 0);
  tm.h0_w_l1 = CohGroup(hom_module(w, sc.l1), 0);
  tm.h0_wbar_l1 = CohGroup(hom_module(env.omega_bar, sc.l1), 0);
  tm.h1_w_l2 = CohGroup(hom_module(w, sc.l2), 1);

  tm.d1 = connecting(hom_left(sc.zg_ds_proj, sc.mu), hom_left(sc.l1_incl, sc.mu), tm.h1_l1_mu, tm.h2_ds_mu);
  tm.d0_prime = connecting(hom_right(sc.l1, env.j), hom_right(sc.l1, env.q), tm.h0_l1_wbar, tm.h1_l1_mu);
  tm.delta0 = connecting(hom_right(w, sc.l2_incl), hom_right(w, sc.p1), tm.h0_w_l1, tm.h1_w_l2);
  tm.wbar_to_w = induced(hom_left(env.q, sc.l1), tm.h0_wbar_l1, tm.h0_w_l1);

  LinearSolver qs(env.q.matrix(), env.omega_bar.moduli());
  tm.wbar_lift = Matrix(w.dim(), env.omega_bar.dim());
  for (std::size_t k = 0; k < env.omega_bar.dim(); ++k) {
    auto x = qs.solve(unit_vec(env.omega_bar.dim(), k));
    if (!x) throw Error("TransportFailed", "envelope map onto the lattice quotient is not surjective");
    tm.wbar_lift.set_column(k, *x);
  }

  require_finite(tm.h0_w_l1.orders());
  tm.h_classes = enumerate_elements(tm.h0_w_l1.orders());
  for (const Vec& cls : tm.h_classes)
    tm.trace_duals.push_back(trace_dual(sc, tm, hom_to_matrix(w, sc.l1, tm.h0_w_l1.lift(cls))));

  tm.checks.add("d1_bijective", tm.d1.is_bijective(), "H^1(Hom(L1,mu)) -> H^2(Hom(DeltaS,mu))");
  tm.checks.add("d0_prime_bijective", tm.d0_prime.is_bijective(), "H^0(Hom(L1,wbar)) -> H^1(Hom(L1,mu))");
  tm.checks.add("delta0_bijective", tm.delta0.is_bijective(), "H^0(Hom(w,L1)) -> H^1(Hom(w,L2))");
  tm.checks.add("wbar_equals_w_on_H0", tm.wbar_to_w.is_bijective(), "H^0(Hom(wbar,L1)) = H^0(Hom(w,L1))");
  std::set<Character> distinct(tm.trace_duals.begin(), tm.trace_duals.end());
  const bool trace_ok = distinct.size() == tm.trace_duals.size() &&
                        Integer(static_cast<long long>(distinct.size())) == tm.h0_l1_wbar.order();
  tm.checks.add("trace_duality_bijective", trace_ok,
                std::to_string(distinct.size()) + " distinct duals for " + tm.h0_l1_wbar.order().str() + " characters");
  return tm;
}

Character trace_dual(const Scenario& sc, const TransportMaps& tm, const Matrix& h_rep) {
  const Matrix hbar = h_rep * tm.wbar_lift;  // wbar -> L1
  std::vector<QmodZ> values;
  for (std::size_t k = 0; k < tm.h0_l1_wbar.num_factors(); ++k) {
    const Matrix g = hom_to_matrix(sc.l1, sc.envelope.omega_bar, tm.h0_l1_wbar.lift(unit_vec(tm.h0_l1_wbar.num_factors(), k)));
    values.push_back(trace_character(hbar * g, sc.group->order()));
  }
  return Character{std::move(values)};
}

EpsilonTransport transport(const Scenario& sc, const TransportMaps& tm, const Character& eps) {
  if (eps.values.size() != tm.h2_ds_mu.num_factors()) throw Error("TransportFailed", "character of the wrong group");
  EpsilonTransport t;
  t.eps = eps;
  t.eps1 = dualize(tm.d1, eps);
  t.eps0 = dualize(tm.d0_prime, t.eps1);
  auto it = std::find(tm.trace_duals.begin(), tm.trace_duals.end(), t.eps0);
  if (it == tm.trace_duals.end()) throw Error("TransportFailed", "eps0 = " + to_string(t.eps0) + " is not a trace dual");
  t.h_class = tm.h_classes[static_cast<std::size_t>(it - tm.trace_duals.begin())];
  t.h_rep = hom_to_matrix(sc.envelope.omega, sc.l1, tm.h0_w_l1.lift(t.h_class));
  t.eps_super1 = reduce_mod(-tm.delta0(t.h_class), tm.h1_w_l2.orders());
  return t;
}

BigDiagram build_M(const Scenario& sc, const EpsilonTransport& t) {
  const GroupPtr& g = sc.group;
  const GModule& w = sc.envelope.omega;
  BigDiagram d;
  d.c = direct_sum(g, {sc.zg_l1, w});
  const GModule& c = d.c.module;
  d.eta = GMap(c, sc.l1, Matrix::hstack({sc.p1.matrix(), t.h_rep}));
  if (!d.eta.is_equivariant()) throw Error("DiagramFailure", "eta is not equivariant");
  d.m = kernel(d.eta);
  const GModule& m = d.m.module;
  LinearSolver into_m(d.m.inclusion.matrix(), c.moduli());

  const Matrix& inc0 = d.c.inclusions[0].matrix();
  const Matrix& inc1 = d.c.inclusions[1].matrix();
  const Matrix& proj1 = d.c.projections[1].matrix();
  const Matrix l2_to_m = sub_coordinates(into_m, d.m, inc0 * sc.l2_incl.matrix(), "L2 -> M");
  const Matrix s_in_c = Matrix::vstack({-(sc.one_tensor * t.h_rep), Matrix::identity(w.dim())});
  const Matrix section = sub_coordinates(into_m, d.m, s_in_c, "section");
  try {
    d.top = ZSplitExt(GMap(sc.l2, m, l2_to_m), GMap(m, w, proj1 * d.m.inclusion.matrix()), section);
  } catch (const Error& e) {
    throw Error("DiagramFailure", std::string("top row: ") + e.what());
  }
  try {
    d.column = ZSplitExt::with_computed_section(d.m.inclusion, d.eta);
  } catch (const Error& e) {
    throw Error("DiagramFailure", std::string("middle column: ") + e.what());
  }
  d.j_prime = GMap(sc.mu, m, sub_coordinates(into_m, d.m, inc1 * sc.envelope.j.matrix(), "torsion embedding"));

  auto& ck = d.checks;
  ck.add("top_row_exact", true, "0 -> L2 -> M -> omega -> 0");
  ck.add("middle_row_exact", check_exact({d.c.inclusions[0], d.c.projections[1]}).exact, "0 -> ZG(x)L1 -> C -> omega -> 0");
  ck.add("bottom_row_exact", check_exact({identity_map(sc.l1)}).exact, "L1 = L1");
  ck.add("left_column_exact", check_exact({sc.l2_incl, sc.p1}).exact, "0 -> L2 -> ZG(x)L1 -> L1 -> 0");
  ck.add("middle_column_exact", check_exact({d.m.inclusion, d.eta}).exact, "0 -> M -> C -> L1 -> 0");
  ck.add("right_column_exact", check_exact({identity_map(w)}).exact, "omega = omega");
  ck.add("square_top_left", same_map(d.m.inclusion.matrix() * l2_to_m, inc0 * sc.l2_incl.matrix(), c.moduli()));
  ck.add("square_top_right", same_map(proj1 * d.m.inclusion.matrix(), d.top.p().matrix(), w.moduli()));
  ck.add("square_bottom", same_map(d.eta.matrix() * inc0, sc.p1.matrix(), sc.l1.moduli()));
  ck.add("eta_kills_section", (d.eta.matrix() * s_in_c).reduce_rows(sc.l1.moduli()).is_zero());
  ck.add("p0_section_identity", same_map(d.top.p().matrix() * section, Matrix::identity(w.dim()), w.moduli()));
  ck.add("rank_M", m.free_rank() == sc.l2.dim() + sc.envelope.omega_bar.dim(),
         std::to_string(m.free_rank()) + " = " + std::to_string(sc.l2.dim()) + " + " +
             std::to_string(sc.envelope.omega_bar.dim()));
  ck.add("torsion_M_is_mu", m.invariant_factors() == sc.mu.invariant_factors(), describe(m));
  for (const auto& c1 : ck.items())
    if (c1.status != Status::Pass) throw Error("DiagramFailure", c1.name + " " + c1.detail);
  return d;
}

ExplicitCocycles explicit_cocycles(const Scenario& sc, const TransportMaps& tm, const EpsilonTransport& t,
                                   const BigDiagram& d, std::uint64_t seed) {
  const auto& g = *sc.group;
  const GModule& w = sc.envelope.omega;
  const GModule hom = hom_module(w, sc.l2);
  const GModule zg = regular_module(sc.group);
  LinearSolver into_dg(augmentation_inclusion(sc.group).matrix(), zg.moduli());
  ExplicitCocycles out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    // 1 - g as an element of DeltaG
    auto one_minus = into_dg.solve(unit_vec(g.order(), 0) - unit_vec(g.order(), x));
    if (!one_minus) throw Error("DiagramFailure", "1 - g is not in DeltaG");
    Matrix f(sc.l2.dim(), w.dim());
    for (std::size_t y = 0; y < w.dim(); ++y) f.set_column(y, tensor_element(sc.delta_g, sc.l1, *one_minus, t.h_rep.column(y)));
    out.c_delta.push_back(hom_from_matrix(w, sc.l2, f));
  }
  out.c_ext = section_cocycle(d.top);
  out.pointwise_equal = true;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!hom.equal(out.c_delta[x], out.c_ext[x])) out.pointwise_equal = false;
  const CohGroup& h1 = tm.h1_w_l2;
  const Vec cls_delta = h1.encode(h1.from_bar(out.c_delta));
  const Vec cls_ext = h1.encode(h1.from_bar(out.c_ext));
  out.same_class = cls_delta == cls_ext;
  out.class_is_eps_super1 = extension_class(d.top, h1) == t.eps_super1 && cls_delta == t.eps_super1;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  Vec b(hom.dim());
  for (auto& v : b) v = coef(rng);
  b = hom.reduce(b);
  Cocycle1 shifted;
  for (std::size_t x = 0; x < g.order(); ++x) shifted.push_back(hom.reduce(out.c_ext[x] + hom.act(int(x), b) - b));
  out.coboundary_shift_same_class = h1.encode(h1.from_bar(shifted)) == cls_ext;
  return out;
}

std::vector<Character> unit_orbit(const Character& chi, const Integer& order) {
  std::set<Character> out;
  for (Integer u = 1; u < order; u += 1)
    if (gcd(u, order).is_one()) out.insert(scale(u, chi));
  if (order == Integer(1) || out.empty()) out.insert(chi);
  return {out.begin(), out.end()};
}

LinkageResult linkage(const ZSplitExt& env_c, const GMap& j, const GModule& mu) {
  const GModule& l1 = env_c.Y();
  const GModule& m = env_c.X();
  const std::size_t n = l1.group()->order();
  LinkageResult r;
  r.middle_trivial = is_cohomologically_trivial(env_c.M()).trivial;
  const CohGroup h0(hom_module(l1, l1), 0);
  const CohGroup h1m(hom_module(l1, m), 1);
  const CohGroup h1mu(hom_module(l1, mu), 1);
  r.d_c = connecting(hom_right(l1, env_c.i()), hom_right(l1, env_c.p()), h0, h1m);
  const AbelianHom inv = inverse(r.d_c);
  const AbelianHom jstar = induced(hom_right(l1, j), h1mu, h1m);
  Character tau;
  for (std::size_t k = 0; k < h0.num_factors(); ++k)
    tau.values.push_back(trace_character(hom_to_matrix(l1, l1, h0.lift(unit_vec(h0.num_factors(), k))), n));
  for (std::size_t k = 0; k < h1mu.num_factors(); ++k) r.chi.values.push_back(tau(inv(jstar(unit_vec(h1mu.num_factors(), k)))));
  r.orbit = unit_orbit(r.chi, mu.torsion_order());
  return r;
}

long long compute_n(std::size_t group_order, std::size_t s_size, std::size_t w) {
  if (group_order < 2) throw Error("InvalidScenario", "n is defined for G != 1");
  return (static_cast<long long>(group_order) - 2) * (static_cast<long long>(s_size) - 1) + static_cast<long long>(w);
}

TheoremReport theorem_check(const Scenario& sc, const TransportMaps& tm, const EpsilonSpace& es,
                            const std::vector<std::size_t>& eps_indices, std::uint64_t seed, bool with_linkage) {
  TheoremReport rep;
  std::vector<std::size_t> idx = eps_indices;
  if (idx.empty())
    for (std::size_t k = 0; k < es.characters.size(); ++k) idx.push_back(k);
  for (std::size_t k : idx) {
    if (k >= es.characters.size()) throw Error("ConfigError", "epsilon index " + std::to_string(k) + " out of range");
    const Character& eps = es.characters[k];
    TheoremOutcome o;
    o.transport = transport(sc, tm, eps);
    o.diagram = build_M(sc, o.transport);
    o.checks.append(o.diagram.checks, "diagram.");
    const ExplicitCocycles ec = explicit_cocycles(sc, tm, o.transport, o.diagram, seed + k);
    o.checks.add("extension_class_is_minus_delta0_h", ec.class_is_eps_super1);
    o.checks.add("explicit_cocycles_pointwise_equal", ec.pointwise_equal);
    o.checks.add("explicit_cocycles_same_class", ec.same_class);
    o.checks.add("coboundary_shift_keeps_class", ec.coboundary_shift_same_class);
    const bool eps_zero = std::all_of(eps.values.begin(), eps.values.end(), [](const QmodZ& q) { return q.is_zero(); });
    if (eps_zero) {
      o.checks.add("zero_eps_gives_zero_h", is_zero(o.transport.h_class) && is_zero(o.transport.eps_super1));
      const GModule hom = hom_module(sc.envelope.omega, sc.l2);
      const ZSplitExt split = module_from_cocycle(sc.l2, sc.envelope.omega, Cocycle1(sc.group->order(), zero_vec(hom.dim())));
      auto phi = find_equivalence(split, o.diagram.top);
      o.checks.add("split_case_isomorphism", phi.has_value() && verify_equivalence(split, o.diagram.top, *phi),
                   "L2 + omega -> M(0)");
    }
    if (with_linkage) {
      try {
        const LinkageResult lr = linkage(o.diagram.column, o.diagram.j_prime, sc.mu);
        o.checks.add("middle_column_cohomologically_trivial", lr.middle_trivial);
        o.checks.add("d_C_bijective", lr.d_c.is_bijective());
        o.checks.add("linked_to_eps1_orbit", lr.orbit == unit_orbit(o.transport.eps1, sc.mu.torsion_order()),
                     "chi = " + to_string(lr.chi) + ", eps1 = " + to_string(o.transport.eps1));
        o.linkage = lr;
      } catch (const Error& e) {
        o.checks.add("linked_to_eps1_orbit", false, e.what());
      }
    }
    rep.checks.append(o.checks, "eps[" + std::to_string(k) + "].");
    rep.per_eps.push_back(std::move(o));
  }
  std::set<Vec> images;
  for (const auto& o : rep.per_eps) images.insert(o.transport.eps_super1);
  rep.checks.add("eps_to_eps_super1_injective", images.size() == rep.per_eps.size(),
                 std::to_string(images.size()) + " classes for " + std::to_string(rep.per_eps.size()) + " characters");
  bool stable = true;
  for (const auto& o : rep.per_eps)
    if (o.diagram.m.module.free_rank() != rep.per_eps.front().diagram.m.module.free_rank() ||
        o.diagram.m.module.invariant_factors() != rep.per_eps.front().diagram.m.module.invariant_factors())
      stable = false;
  rep.checks.add("rank_and_torsion_independent_of_eps", stable);
  return rep;
}

}  // namespace galstruct
