#include "galstruct/shapiro.hpp"

#include "galstruct/error.hpp"

namespace galstruct {

namespace {

struct Cosets {
  std::vector<std::size_t> rep;  // element -> transversal position
};

Cosets coset_table(const Subgroup& h, const std::vector<int>& t) {
  const FiniteGroup& g = *h.parent();
  Cosets c;
  c.rep.assign(g.order(), std::size_t(-1));
  for (std::size_t k = 0; k < t.size(); ++k)
    for (int x : h.members()) {
      const int y = g.mul(t[k], x);
      if (c.rep[std::size_t(y)] != std::size_t(-1)) throw Error("BadTransversal", "two representatives of one coset");
      c.rep[std::size_t(y)] = k;
    }
  return c;
}

// Block matrix with blocks rho_B(h_ij) at (i, j) for the permutation j = pi(i).
Matrix block_action(const CoinducedModule& ci, const Cosets& cs, int g) {
  const FiniteGroup& G = *ci.h.parent();
  const std::size_t bd = ci.b.dim();
  const std::size_t k = ci.transversal.size();
  Matrix m(k * bd, k * bd);
  for (std::size_t i = 0; i < k; ++i) {
    const int ti = ci.transversal[i];
    const std::size_t j = cs.rep[std::size_t(G.mul(G.inv(g), ti))];
    const int h = G.mul(G.mul(G.inv(ti), g), ci.transversal[j]);
    const Matrix& rho = ci.b.action(ci.h.local_index(h));
    for (std::size_t r = 0; r < bd; ++r)
      for (std::size_t c = 0; c < bd; ++c) m(i * bd + r, j * bd + c) = rho(r, c);
  }
  return m;
}

// Blocks rho(h^{-1}) from `from` position k to the `to` position of the same coset, t' = t h.
Matrix change_matrix(const CoinducedModule& from, const CoinducedModule& to) {
  if (!(from.h.members() == to.h.members()) || !same_module(from.b, to.b))
    throw Error("BadTransversal", "transversal change between different coinduced modules");
  const FiniteGroup& G = *from.h.parent();
  const Cosets cs = coset_table(to.h, to.transversal);
  const std::size_t bd = from.b.dim();
  const std::size_t k = from.transversal.size();
  Matrix m(k * bd, k * bd);
  for (std::size_t i = 0; i < k; ++i) {
    const int t = from.transversal[i];
    const std::size_t j = cs.rep[std::size_t(t)];
    const int h = G.mul(G.inv(t), to.transversal[j]);
    const Matrix& rho = from.b.action(from.h.local_index(G.inv(h)));
    for (std::size_t r = 0; r < bd; ++r)
      for (std::size_t c = 0; c < bd; ++c) m(j * bd + r, i * bd + c) = rho(r, c);
  }
  return m;
}

std::size_t tuple_index(const std::vector<int>& digits, std::size_t n) {
  std::size_t idx = 0;
  for (int x : digits) idx = idx * n + std::size_t(x);
  return idx;
}

bool same_hom(const AbelianHom& a, const AbelianHom& b) {
  if (a.source_orders() != b.source_orders() || a.target_orders() != b.target_orders()) return false;
  for (std::size_t i = 0; i < a.source_orders().size(); ++i) {
    const Vec e = unit_vec(a.source_orders().size(), i);
    if (a(e) != b(e)) return false;
  }
  return true;
}

constexpr std::size_t kEnumerationCap = 200000;

bool small_enough(const Vec& orders) {
  Integer total(1);
  for (const auto& o : orders) {
    if (o.is_zero()) return false;
    total *= o;
    if (Integer(static_cast<long long>(kEnumerationCap)) < total) return false;
  }
  return true;
}

std::size_t kernel_size(const AbelianHom& f) {
  std::size_t count = 0;
  for (const Vec& x : enumerate_elements(f.source_orders()))
    if (is_zero(f(x))) ++count;
  return count;
}

}  // namespace

CoinducedModule coinduce(const Subgroup& h, const GModule& b, std::vector<int> transversal) {
  if (!same_group(*b.group(), *h.as_group())) throw Error("GroupMismatch", "B must be a module over H");
  const GroupPtr& g = h.parent();
  if (transversal.empty()) transversal = h.left_transversal();
  if (transversal.size() != h.index() || transversal[0] != 0)
    throw Error("BadTransversal", "a transversal has one element per coset and starts with the identity");
  const Cosets cs = coset_table(h, transversal);

  CoinducedModule ci{h, b, std::move(transversal), {}, {}, {}, {}};
  const std::size_t k = ci.transversal.size();
  Vec moduli;
  for (std::size_t i = 0; i < k; ++i) moduli.insert(moduli.end(), b.moduli().begin(), b.moduli().end());
  std::vector<Matrix> act;
  for (std::size_t x = 0; x < g->order(); ++x) act.push_back(block_action(ci, cs, int(x)));
  ci.carrier = GModule(g, moduli, act);
  // g (t_j (x) b) = t_i (x) h b with t_i h = g t_j: the same blocks
  ci.orbit_product = GModule(g, moduli, act);
  ci.identification = GMap(ci.carrier, ci.orbit_product, Matrix::identity(moduli.size()));

  Matrix ev(b.dim(), moduli.size());
  for (std::size_t r = 0; r < b.dim(); ++r) ev(r, r) = Integer(1);
  ci.evaluation = GMap(restrict_module(ci.carrier, h), b, ev);
  if (!ci.identification.is_equivariant() || !ci.evaluation.is_equivariant())
    throw Error("InternalError", "coinduced module maps are not equivariant");
  return ci;
}

GMap transversal_change(const CoinducedModule& from, const CoinducedModule& to) {
  return GMap(from.carrier, to.carrier, change_matrix(from, to));
}

GMap orbit_product_change(const CoinducedModule& from, const CoinducedModule& to) {
  return GMap(from.orbit_product, to.orbit_product, change_matrix(from, to));
}

AbelianHom restriction(const CohGroup& src, const CohGroup& dst, const Subgroup& h) {
  const int r = src.degree();
  if (r != dst.degree() || r < 0 || r > 2) throw Error("UnsupportedDegree", "restriction in degrees 0, 1, 2");
  const std::size_t nf = src.num_factors();
  const std::size_t n = h.parent()->order();
  const std::size_t hn = h.order();
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < nf; ++i) {
    const Vec cochain = src.lift(unit_vec(nf, i));
    if (r == 0) {
      cols.push_back(dst.encode(cochain));
      continue;
    }
    const std::vector<Vec> bar = src.to_bar(cochain);
    std::vector<Vec> vals;
    std::size_t count = 1;
    for (int k = 0; k < r; ++k) count *= hn;
    for (std::size_t t = 0; t < count; ++t) {
      std::vector<int> digits(static_cast<std::size_t>(r));
      std::size_t rest = t;
      for (int k = r - 1; k >= 0; --k) {
        digits[std::size_t(k)] = h.members()[rest % hn];
        rest /= hn;
      }
      vals.push_back(bar[tuple_index(digits, n)]);
    }
    cols.push_back(dst.encode(dst.from_bar(vals)));
  }
  return AbelianHom(src.orders(), dst.orders(), Matrix::from_columns(dst.num_factors(), cols));
}

ShapiroMap shapiro(const GModule& d, const CoinducedModule& ci, int r) {
  const GModule x = hom_module(d, ci.carrier);
  const GModule res_x = restrict_module(x, ci.h);
  const GModule res_d = restrict_module(d, ci.h);
  const GModule y = hom_module(res_d, ci.b);
  const GMap ev_formal = hom_right(res_d, ci.evaluation);
  if (ev_formal.source().dim() != res_x.dim()) throw Error("InternalError", "Hom layouts differ under restriction");
  const GMap ev(res_x, y, ev_formal.matrix());

  ShapiroMap sm;
  sm.source = CohGroup(x, r);
  sm.target = CohGroup(y, r);
  const CohGroup mid(res_x, r);
  sm.map = compose(induced(ev, mid, sm.target), restriction(sm.source, mid, ci.h));
  sm.orders_equal = sm.source.order() == sm.target.order();
  sm.bijective = sm.orders_equal && sm.map.is_bijective();
  if (sm.bijective && small_enough(sm.source.orders())) sm.bijective = kernel_size(sm.map) == 1;
  return sm;
}

ShapiroSplitting shapiro_splitting(const GSet& s, int p, const GModule& b, bool with_free_summand) {
  const GroupPtr& g = s.group();
  const Subgroup h = s.stabilizer(p);
  ShapiroSplitting out{coinduce(h, b), p, {}, {}, {}, {}, {}, {}, {}, {}};
  const CoinducedModule& ci = out.ci;
  const GModule zs = permutation_module(s);
  const GModule ds = delta_s(s);
  const GMap a = delta_s_inclusion(s);

  out.sh_zs = shapiro(zs, ci, 2);
  out.sh_ds = shapiro(ds, ci, 2);
  const CohGroup top_src(hom_module(zs, ci.carrier), 2);
  const CohGroup top_dst(hom_module(ds, ci.carrier), 2);
  out.top = induced(hom_left(a, ci.carrier), top_src, top_dst);
  const GMap a_h = restrict_map(a, h);
  out.bottom = induced(hom_left(a_h, b), out.sh_zs.target, out.sh_ds.target);

  // lambda_p(q) = q - p
  LinearSolver ds_solver(a.matrix(), zero_vec(zs.dim()));
  Matrix lam(ds.dim(), zs.dim());
  for (std::size_t q = 0; q < zs.dim(); ++q) {
    Vec v = unit_vec(zs.dim(), q);
    v[std::size_t(p)] -= Integer(1);
    auto c = ds_solver.solve(v);
    if (!c) throw Error("InternalError", "q - p is not in DeltaS");
    lam.set_column(q, *c);
  }
  out.lambda = GMap(restrict_module(zs, h), restrict_module(ds, h), lam);
  out.lambda_star = induced(hom_left(out.lambda, b), out.sh_ds.target, out.sh_zs.target);

  CheckList& ck = out.checks;
  ck.add("shapiro_ZS_bijective", out.sh_zs.bijective);
  ck.add("shapiro_DeltaS_bijective", out.sh_ds.bijective);
  ck.add("square_commutes", same_hom(compose(out.bottom, out.sh_zs.map), compose(out.sh_ds.map, out.top)));
  ck.add("lambda_equivariant", out.lambda.is_equivariant());
  ck.add("lambda_kills_p", is_zero(out.lambda(unit_vec(zs.dim(), std::size_t(p)))));
  ck.add("lambda_after_a_is_identity", (lam * a.matrix()) == Matrix::identity(ds.dim()));
  if (!out.sh_zs.bijective || !out.sh_ds.bijective) return out;

  out.s = compose(inverse(out.sh_zs.map), compose(out.lambda_star, out.sh_ds.map));
  const AbelianHom as = compose(out.top, out.s);
  bool every = true;
  if (small_enough(top_dst.orders())) {
    for (const Vec& x : enumerate_elements(top_dst.orders()))
      if (as(x) != reduce_mod(x, top_dst.orders())) every = false;
  } else {
    every = same_hom(as, identity_hom(top_dst.orders()));
  }
  ck.add("a_star_s_is_identity", every, "H^2 of order " + top_dst.order().str());

  if (with_free_summand) {
    // V = coind(B) + coind_1(Z); the extra summand has no H^2 and does not change the splitting
    const Subgroup one = trivial_subgroup(g);
    const CoinducedModule w = coinduce(one, trivial_module(one.as_group()));
    const DirectSum v = direct_sum(g, {ci.carrier, w.carrier});
    const CohGroup vz(hom_module(zs, v.module), 2), vd(hom_module(ds, v.module), 2);
    const AbelianHom pz = induced(hom_right(zs, v.projections[0]), vz, top_src);
    const AbelianHom pd = induced(hom_right(ds, v.projections[0]), vd, top_dst);
    ck.add("free_summand_invisible", pz.is_bijective() && pd.is_bijective());
    if (pz.is_bijective() && pd.is_bijective()) {
      const AbelianHom top_v = induced(hom_left(a, v.module), vz, vd);
      const AbelianHom s_v = compose(inverse(pz), compose(out.s, pd));
      ck.add("a_star_s_is_identity_with_free_summand", same_hom(compose(top_v, s_v), identity_hom(vd.orders())));
    }
  }
  return out;
}

HomOfPairs hom_of_pairs(const ShortExact& top, const ShortExact& bottom) {
  const GModule& a1 = top.i.source();
  const GModule& a2 = top.i.target();
  const GModule& a3 = top.p.target();
  const GModule& b1 = bottom.i.source();
  const GModule& b2 = bottom.i.target();
  const GModule& b3 = bottom.p.target();
  const GroupPtr& g = a1.group();
  const GModule h1 = hom_module(a1, b1), h2 = hom_module(a2, b2), h3 = hom_module(a3, b3);
  const GModule h12 = hom_module(a1, b2), h23 = hom_module(a2, b3);
  const DirectSum big = direct_sum(g, {h1, h2, h3});
  const DirectSum cons = direct_sum(g, {h12, h23});

  const GMap f2_i = hom_left(top.i, b2);      // Hom(A2,B2) -> Hom(A1,B2)
  const GMap j_f1 = hom_right(a1, bottom.i);  // Hom(A1,B1) -> Hom(A1,B2)
  const GMap f3_p = hom_left(top.p, b3);      // Hom(A3,B3) -> Hom(A2,B3)
  const GMap q_f2 = hom_right(a2, bottom.p);  // Hom(A2,B2) -> Hom(A2,B3)
  const GMap c = compose(cons.inclusions[0], compose(f2_i, big.projections[1]) - compose(j_f1, big.projections[0])) +
                 compose(cons.inclusions[1], compose(f3_p, big.projections[2]) - compose(q_f2, big.projections[1]));

  HomOfPairs out;
  out.triples = kernel(c);
  const DirectSum pairs = direct_sum(g, {h1, h2});
  out.pairs = pairs.module;
  out.to_pairs = compose(compose(pairs.inclusions[0], big.projections[0]) + compose(pairs.inclusions[1], big.projections[1]),
                         out.triples.inclusion);
  out.difference = compose(j_f1, pairs.projections[0]) - compose(f2_i, pairs.projections[1]);

  out.h2_triples = CohGroup(out.triples.module, 2);
  out.h2_pairs = CohGroup(out.pairs, 2);
  out.h2_right = CohGroup(h12, 2);
  out.first = induced(out.to_pairs, out.h2_triples, out.h2_pairs);
  out.second = induced(out.difference, out.h2_pairs, out.h2_right);
  out.h2_sequence.injective = out.first.is_injective();
  out.h2_sequence.surjective = out.second.is_surjective();
  if (compose(out.second, out.first).is_zero() && small_enough(out.h2_pairs.orders()) &&
      small_enough(out.h2_triples.orders())) {
    const Integer image = out.h2_triples.order() / Integer(static_cast<long long>(kernel_size(out.first)));
    out.h2_sequence.middle = image == Integer(static_cast<long long>(kernel_size(out.second)));
  }

  if (same_module(a1, b1) && same_module(a2, b2) && same_module(a3, b3)) {
    Vec v;
    for (const GModule* m : {&a1, &a2, &a3}) {
      const Vec part = hom_from_matrix(*m, *m, Matrix::identity(m->dim()));
      v.insert(v.end(), part.begin(), part.end());
    }
    LinearSolver sol(out.triples.inclusion.matrix(), big.module.moduli());
    out.contains_identity = sol.solve(v).has_value();
  }
  return out;
}

}  // namespace galstruct
