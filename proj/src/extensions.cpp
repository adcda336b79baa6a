#include "galstruct/extensions.hpp"

#include "galstruct/error.hpp"

#include <memory>
#include <numeric>

namespace galstruct {

namespace {

bool same_map(const Matrix& a, const Matrix& b, const Vec& target_moduli) {
  return a.reduce_rows(target_moduli) == b.reduce_rows(target_moduli);
}

Vec flatten(const Matrix& m) {
  Vec out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

// Pull back along an injective map, or nullopt outside the image.
std::optional<Vec> preimage_along(const LinearSolver& solver, const GMap& i, const Vec& m) {
  auto x = solver.solve(m);
  if (!x) return std::nullopt;
  return i.source().reduce(*x);
}

}  // namespace

ZSplitExt::ZSplitExt(GMap i, GMap p, Matrix section) : i_(std::move(i)), p_(std::move(p)), s_(std::move(section)) {
  if (!same_module(i_.target(), p_.source())) throw Error("NotComposable", "i and p do not share a middle term");
  if (!i_.is_equivariant() || !p_.is_equivariant()) throw Error("NotEquivariant", "extension maps must be G-maps");
  const auto verdict = check_exact({i_, p_});
  if (!verdict.exact) throw Error("NotExact", "extension fails at " + verdict.node + " (" + verdict.witness + ")");
  if (s_.rows() != M().dim() || s_.cols() != Y().dim()) throw Error("IllFormedMap", "section has the wrong shape");
  for (std::size_t c = 0; c < Y().dim(); ++c) {
    const Vec sc = s_.column(c);
    if (!Y().equal(p_.matrix() * sc, unit_vec(Y().dim(), c)))
      throw Error("NotASection", "p o s differs from the identity at coordinate " + std::to_string(c));
    const Integer& m = Y().moduli()[c];
    if (!m.is_zero() && !is_zero(M().reduce(m * sc)))
      throw Error("NotASection", "section is not well defined on torsion coordinate " + std::to_string(c));
  }
  s_ = s_.reduce_rows(M().moduli());
}

ZSplitExt ZSplitExt::with_computed_section(GMap i, GMap p) {
  const GModule& m = p.source();
  const GModule& y = p.target();
  const GModule& x = i.source();
  LinearSolver lift(p.matrix(), y.moduli());
  LinearSolver pull(i.matrix(), m.moduli());
  Matrix s(m.dim(), y.dim());
  for (std::size_t c = 0; c < y.dim(); ++c) {
    auto b = lift.solve(unit_vec(y.dim(), c));
    if (!b) throw Error("NotExact", "p is not surjective");
    const Integer& k = y.moduli()[c];
    if (!k.is_zero()) {
      // k*b lies in i(X); correct b by i(t) so that k*(b + i t) = 0.
      auto z = pull.solve(m.reduce(k * *b));
      if (!z) throw Error("NotExact", "kernel of p is not the image of i");
      LinearSolver scale(k * Matrix::identity(x.dim()), x.moduli());
      auto t = scale.solve(-*z);
      if (!t) throw Error("NotZSplit", "no Z-section at torsion coordinate " + std::to_string(c));
      *b = *b + i.matrix() * *t;
    }
    s.set_column(c, m.reduce(*b));
  }
  return ZSplitExt(std::move(i), std::move(p), std::move(s));
}

Vec ZSplitExt::pull_back(const Vec& m) const {
  LinearSolver solver(i_.matrix(), M().moduli());
  auto x = preimage_along(solver, i_, m);
  if (!x) throw Error("NotInImage", "element " + to_string(m) + " is not in the image of i");
  return *x;
}

Matrix ZSplitExt::retraction() const {
  LinearSolver solver(i_.matrix(), M().moduli());
  Matrix r(X().dim(), M().dim());
  for (std::size_t c = 0; c < M().dim(); ++c) {
    const Vec e = unit_vec(M().dim(), c);
    const Vec v = M().reduce(e - s_ * (p_.matrix() * e));
    auto x = preimage_along(solver, i_, v);
    if (!x) throw Error("NotExact", "retraction undefined");
    r.set_column(c, *x);
  }
  return r;
}

Cocycle1 section_cocycle(const ZSplitExt& e) {
  const auto& g = *e.M().group();
  LinearSolver solver(e.i().matrix(), e.M().moduli());
  Cocycle1 c;
  c.reserve(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const int gx = static_cast<int>(x);
    Matrix f(e.X().dim(), e.Y().dim());
    for (std::size_t y = 0; y < e.Y().dim(); ++y) {
      const Vec gy = e.Y().act(g.inv(gx), unit_vec(e.Y().dim(), y));
      const Vec v = e.M().reduce(e.M().action(gx) * (e.section() * gy) - e.section().column(y));
      auto pre = preimage_along(solver, e.i(), v);
      if (!pre) throw Error("NotExact", "g.s - s does not land in X");
      f.set_column(y, *pre);
    }
    c.push_back(hom_from_matrix(e.Y(), e.X(), f));
  }
  return c;
}

CohGroup extension_group(const GModule& y, const GModule& x) { return CohGroup(hom_module(y, x), 1); }

Vec extension_class(const ZSplitExt& e, const CohGroup& h1) {
  if (h1.degree() != 1 || !same_module(h1.coefficients(), hom_module(e.Y(), e.X())))
    throw Error("GroupMismatch", "extension class lives in H^1(G, Hom(Y, X))");
  return h1.encode(h1.from_bar(section_cocycle(e)));
}

void check_cocycle(const GModule& x, const GModule& y, const Cocycle1& c) {
  const GModule h = hom_module(y, x);
  const auto& g = *x.group();
  if (c.size() != g.order()) throw Error("NotACocycle", "need one value per group element");
  for (const auto& v : c)
    if (v.size() != h.dim()) throw Error("NotACocycle", "value has the wrong length");
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      const int ab = g.mul(int(a), int(b));
      if (!h.equal(c[std::size_t(ab)], c[a] + h.act(int(a), c[b])))
        throw Error("NotACocycle", "cocycle identity fails at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
}

ZSplitExt module_from_cocycle(const GModule& x, const GModule& y, const Cocycle1& c) {
  check_cocycle(x, y, c);
  const GroupPtr& g = x.group();
  const std::size_t dx = x.dim(), dy = y.dim();
  Vec moduli = x.moduli();
  moduli.insert(moduli.end(), y.moduli().begin(), y.moduli().end());
  std::vector<Matrix> act;
  for (std::size_t e = 0; e < g->order(); ++e) {
    const int ge = static_cast<int>(e);
    const Matrix twist = hom_to_matrix(y, x, c[e]) * y.action(ge);
    act.push_back(Matrix::vstack({Matrix::hstack({x.action(ge), twist}),
                                  Matrix::hstack({Matrix(dy, dx), y.action(ge)})})
                      .reduce_rows(moduli));
  }
  GModule m(g, moduli, std::move(act));
  Matrix inc(dx + dy, dx), proj(dy, dx + dy), sec(dx + dy, dy);
  for (std::size_t k = 0; k < dx; ++k) inc(k, k) = 1;
  for (std::size_t k = 0; k < dy; ++k) {
    proj(k, dx + k) = 1;
    sec(dx + k, k) = 1;
  }
  return ZSplitExt(GMap(x, m, inc), GMap(m, y, proj), sec);
}

bool verify_equivalence(const ZSplitExt& e1, const ZSplitExt& e2, const Matrix& phi) {
  if (phi.rows() != e2.M().dim() || phi.cols() != e1.M().dim()) return false;
  try {
    GMap f(e1.M(), e2.M(), phi);
    if (!f.is_equivariant()) return false;
    if (!same_map(phi * e1.i().matrix(), e2.i().matrix(), e2.M().moduli())) return false;
    if (!same_map(e2.p().matrix() * phi, e1.p().matrix(), e2.Y().moduli())) return false;
    return AbelianHom(e1.M().moduli(), e2.M().moduli(), phi).is_bijective();
  } catch (const Error&) {
    return false;
  }
}

std::optional<Matrix> find_equivalence(const ZSplitExt& e1, const ZSplitExt& e2) {
  if (!same_module(e1.X(), e2.X()) || !same_module(e1.Y(), e2.Y()))
    throw Error("GroupMismatch", "extensions have different end terms");
  const GModule& m1 = e1.M();
  const GModule& m2 = e2.M();
  const Matrix& i2 = e2.i().matrix();
  const Matrix& p1 = e1.p().matrix();
  const Matrix phi0 = i2 * e1.retraction() + e2.section() * p1;

  const auto hom = hom_layout(e1.Y(), e1.X());
  std::vector<Matrix> basis;  // i2 U_k p1
  for (std::size_t k = 0; k < hom.size(); ++k)
    basis.push_back(i2 * hom_to_matrix(e1.Y(), e1.X(), unit_vec(hom.size(), k)) * p1);

  const auto& gens = m1.group()->min_generators();
  Vec row_moduli;
  std::vector<Vec> cols(basis.size());
  Vec rhs;
  for (int g : gens) {
    for (std::size_t r = 0; r < m2.dim(); ++r)
      for (std::size_t c = 0; c < m1.dim(); ++c) row_moduli.push_back(m2.moduli()[r]);
    const Vec d0 = flatten(m2.action(g) * phi0 - phi0 * m1.action(g));
    rhs.insert(rhs.end(), d0.begin(), d0.end());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Vec dk = flatten(m2.action(g) * basis[k] - basis[k] * m1.action(g));
      cols[k].insert(cols[k].end(), dk.begin(), dk.end());
    }
  }
  Matrix phi = phi0;
  if (!gens.empty()) {
    Matrix a = basis.empty() ? Matrix(rhs.size(), 0) : Matrix::from_columns(rhs.size(), cols);
    auto u = LinearSolver(a, row_moduli).solve(-rhs);
    if (!u) return std::nullopt;
    for (std::size_t k = 0; k < basis.size(); ++k) phi = phi + (*u)[k] * basis[k];
  }
  phi = phi.reduce_rows(m2.moduli());
  if (!verify_equivalence(e1, e2, phi)) return std::nullopt;
  return phi;
}

Pushout pushout(const ZSplitExt& e, const GMap& f) {
  if (!same_module(f.source(), e.X())) throw Error("NotComposable", "pushout map must start at X");
  const GroupPtr& g = e.M().group();
  const DirectSum ds = direct_sum(g, {f.target(), e.M()});
  const GMap anti(e.X(), ds.module, Matrix::vstack({f.matrix(), -e.i().matrix()}));
  const Quot q = cokernel(anti);
  const GMap i2 = compose(q.projection, ds.inclusions[0]);
  const GMap from_middle = compose(q.projection, ds.inclusions[1]);
  const GMap p2(q.module, e.Y(), e.p().matrix() * ds.projections[1].matrix() * q.lifts);
  const Matrix s2 = from_middle.matrix() * e.section();
  return {ZSplitExt(i2, p2, s2), from_middle};
}

std::vector<GMap> splice(const GMap& i1, const GMap& p1, const GMap& i2, const GMap& p2) {
  if (!same_module(p1.target(), i2.source()))
    throw Error("BoundaryMismatch", "right end of the first sequence differs from the left end of the second");
  return {i1, compose(i2, p1), p2};
}

std::pair<GMap, GMap> hom_covariant(const GModule& t, const GMap& i, const GMap& p) {
  return {hom_right(t, i), hom_right(t, p)};
}

std::pair<GMap, GMap> hom_contravariant(const GMap& i, const GMap& p, const GModule& t) {
  return {hom_left(p, t), hom_left(i, t)};
}

// ---------------------------------------------------------------- envelopes

std::vector<CatalogLattice> default_envelope_catalog(const GroupPtr& g, const GSet& s) {
  const GModule dg = augmentation_ideal(g);
  const GModule dgd = dual_lattice(dg);
  const GModule z = trivial_module(g);
  return {
      {"DeltaG", dg},
      {"DeltaG_dual", dgd},
      {"DeltaG_x_DeltaS", tensor(dg, delta_s(s))},
      {"Z+DeltaG", direct_sum(g, {z, dg}).module},
      {"Z+DeltaG_dual", direct_sum(g, {z, dgd}).module},
      {"ZS", permutation_module(s)},
  };
}

std::vector<CatalogLattice> select_catalog(const GroupPtr& g, const GSet& s, const std::vector<std::string>& names) {
  const auto all = default_envelope_catalog(g, s);
  if (names.empty()) return all;
  std::vector<CatalogLattice> out;
  for (const auto& n : names) {
    bool found = false;
    for (const auto& c : all)
      if (c.name == n) {
        out.push_back(c);
        found = true;
      }
    if (!found) throw Error("UnknownCatalogEntry", "no envelope catalog entry named " + n);
  }
  return out;
}

namespace {

// omega0 + ZG^j over omega_bar0 + ZG^j.
Envelope pad(const GModule& mu, const ZSplitExt& ext, std::size_t j, std::size_t w) {
  const GroupPtr& g = mu.group();
  Envelope env;
  env.mu = mu;
  env.w = w;
  if (j == 0) {
    env.omega = ext.M();
    env.omega_bar = ext.Y();
    env.j = ext.i();
    env.q = ext.p();
    return env;
  }
  const GModule free = regular_module(g, j);
  const DirectSum top = direct_sum(g, {ext.M(), free});
  const DirectSum bot = direct_sum(g, {ext.Y(), free});
  env.omega = top.module;
  env.omega_bar = bot.module;
  env.j = compose(top.inclusions[0], ext.i());
  env.q = GMap(top.module, bot.module, Matrix::block_diag({ext.p().matrix(), Matrix::identity(free.dim())}));
  return env;
}

constexpr long kMaxClasses = 4096;

// omega = coker(ZG -> ZG^2, z -> (z x, z y)) has projective dimension <= 1,
// hence is cohomologically trivial; search small x, y whose cokernel has
// torsion exactly mu, then pad with ZG^(w-1).
Envelope presentation_envelope(const GModule& mu, std::size_t w) {
  if (w == 0) throw Error("NoEnvelopeFound", "presentation strategy needs w >= 1");
  const GroupPtr& g = mu.group();
  const auto& grp = *g;
  const std::size_t n = grp.order();
  const Integer m = mu.moduli()[0];
  if (mu.dim() != 1) throw Error("NoEnvelopeFound", "presentation strategy handles cyclic mu only");
  const GModule f1 = regular_module(g, 1), f2 = regular_module(g, 2);
  for (int bound : {1, 2}) {
    const std::size_t base = static_cast<std::size_t>(2 * bound + 1);
    std::size_t total = 1;
    for (std::size_t i = 0; i < 2 * n; ++i) total *= base;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      Vec xy(2 * n);
      bool inner = bound == 1;
      for (std::size_t i = 0; i < 2 * n; ++i) {
        const long v = static_cast<long>(c % base) - bound;
        if (v == bound || v == -bound) inner = true;
        xy[i] = v;
        c /= base;
      }
      if (!inner) continue;  // already tried with the smaller bound
      Matrix a(2 * n, n);
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t h = 0; h < n; ++h) {
          const std::size_t zh = static_cast<std::size_t>(grp.mul(int(z), int(h)));
          a(zh, z) += xy[h];
          a(n + zh, z) += xy[n + h];
        }
      const SmithForm sf = smith_form(a);
      if (sf.rank != n) continue;
      Integer prod = 1;
      for (const auto& d : sf.diagonal) prod *= d;
      if (prod != m) continue;
      const Quot q = cokernel(GMap(f1, f2, a));
      const TorsionSplit ts = torsion_split(q.module);
      const GModule& t = ts.torsion.module;
      if (t.dim() != 1) continue;
      bool same = true;
      for (std::size_t h = 0; h < n && same; ++h)
        same = reduce_mod(t.action(int(h))(0, 0), m) == reduce_mod(mu.action(int(h))(0, 0), m);
      if (!same) continue;
      const GMap j(mu, q.module, ts.torsion.inclusion.matrix());
      const ZSplitExt ext = ZSplitExt::with_computed_section(j, ts.lattice.projection);
      Envelope env = pad(mu, ext, w - 1, w);
      env.strategy = "presentation";
      env.base = "coker(ZG -> ZG^2, 1 -> " + to_string(xy) + ")";
      const std::string bad = validate_envelope(env);
      if (!bad.empty()) throw Error("ValidationFailed", bad);
      return env;
    }
  }
  throw Error("NoEnvelopeFound", "no presentation ZG -> ZG^2 with entries in [-2, 2] has torsion mu");
}

}  // namespace

Envelope build_envelope(const GModule& mu, const std::string& strategy, std::size_t w,
                        const std::vector<CatalogLattice>& catalog) {
  if (!mu.is_finite()) throw Error("InvalidModule", "mu must be finite");
  const GroupPtr& g = mu.group();
  const std::size_t n = g->order();
  if (strategy == "coprime") {
    if (!gcd(mu.torsion_order(), Integer(static_cast<long long>(n))).is_one())
      throw Error("NoEnvelopeFound", "coprime strategy needs gcd(|mu|, |G|) = 1");
    const GModule zero = zero_module(g);
    const ZSplitExt base(GMap(mu, mu, Matrix::identity(mu.dim())), zero_map(mu, zero), Matrix(mu.dim(), 0));
    Envelope env = pad(mu, base, w, w);
    env.strategy = "coprime";
    env.base = "coprime";
    const std::string bad = validate_envelope(env);
    if (!bad.empty()) throw Error("ValidationFailed", bad);
    return env;
  }
  if (strategy == "presentation") return presentation_envelope(mu, w);
  if (strategy != "search") throw Error("ConfigError", "unknown envelope strategy " + strategy);

  std::vector<std::string> tried;
  for (const auto& cand : catalog) {
    const GModule& lat = cand.lattice;
    if (!lat.is_lattice()) {
      tried.push_back(cand.name + ": not a lattice");
      continue;
    }
    const std::size_t r = lat.dim();
    if (r % n != 0) {
      tried.push_back(cand.name + ": rank " + std::to_string(r) + " not divisible by |G| = " + std::to_string(n));
      continue;
    }
    if (r > n * w) {
      tried.push_back(cand.name + ": rank " + std::to_string(r) + " exceeds |G|w = " + std::to_string(n * w));
      continue;
    }
    const CohGroup h1 = extension_group(lat, mu);
    if (h1.order() > Integer(kMaxClasses)) {
      tried.push_back(cand.name + ": " + h1.order().str() + " extension classes, over the search bound");
      continue;
    }
    for (const Vec& cls : enumerate_elements(h1.orders())) {
      const ZSplitExt ext = module_from_cocycle(mu, lat, h1.to_bar(h1.lift(cls)));
      const auto verdict = is_cohomologically_trivial(ext.M());
      if (!verdict.trivial) {
        tried.push_back(cand.name + " class " + to_string(cls) + ": not cohomologically trivial (degree " +
                        std::to_string(verdict.degree) + ")");
        continue;
      }
      Envelope env = pad(mu, ext, w - r / n, w);
      env.strategy = "search";
      env.base = cand.name;
      env.class_coords = cls;
      env.tried = tried;
      const std::string bad = validate_envelope(env);
      if (!bad.empty()) throw Error("ValidationFailed", bad);
      return env;
    }
  }
  std::string msg = "catalog exhausted";
  for (const auto& t : tried) msg += "; " + t;
  throw Error("NoEnvelopeFound", msg);
}

std::string validate_envelope(const Envelope& e) {
  if (!e.mu.is_finite()) return "mu is not finite";
  if (!e.omega_bar.is_lattice()) return "omega_bar is not a lattice";
  if (!same_module(e.j.source(), e.mu) || !same_module(e.j.target(), e.omega) ||
      !same_module(e.q.source(), e.omega) || !same_module(e.q.target(), e.omega_bar))
    return "maps do not match the modules";
  if (!e.j.is_equivariant() || !e.q.is_equivariant()) return "maps are not equivariant";
  const auto ex = check_exact({e.j, e.q});
  if (!ex.exact) return "sequence not exact at " + ex.node;
  if (e.omega.torsion_order() != e.mu.torsion_order()) return "mu is not the torsion of omega";
  const std::size_t n = e.mu.group()->order();
  if (e.omega_bar.dim() != n * e.w) return "rank of omega_bar is not |G|w";
  if (!is_cohomologically_trivial(e.omega).trivial) return "omega is not cohomologically trivial";
  return "";
}

}  // namespace galstruct
