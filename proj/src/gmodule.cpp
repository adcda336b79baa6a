#include "galstruct/gmodule.hpp"

#include "galstruct/error.hpp"

#include <algorithm>
#include <sstream>

namespace galstruct {

// ---------------------------------------------------------------- GModule

GModule::GModule(GroupPtr group, Vec moduli, std::vector<Matrix> action) {
  const std::size_t n = moduli.size();
  for (const auto& m : moduli)
    if (m.sign() < 0 || m.is_one()) throw Error("InvalidModule", "modulus must be 0 or >= 2, got " + m.str());
  if (action.size() != group->order()) throw Error("InvalidModule", "need one action matrix per group element");
  for (auto& a : action) {
    if (a.rows() != n || a.cols() != n) throw Error("InvalidModule", "action matrix has wrong shape");
    a = a.reduce_rows(moduli);
  }
  if (!(action[0] == Matrix::identity(n).reduce_rows(moduli))) throw Error("InvalidModule", "identity does not act trivially");
  for (std::size_t g = 0; g < action.size(); ++g)
    for (std::size_t i = 0; i < n; ++i) {
      if (moduli[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Integer v = moduli[i] * action[g](j, i);
        if (moduli[j].is_zero() ? !v.is_zero() : !(v % moduli[j]).is_zero())
          throw Error("InvalidModule", "action of " + std::to_string(g) + " does not preserve relations at coordinate " +
                                           std::to_string(i));
      }
    }
  // The law rho(g) rho(h) = rho(gh) for all g and all generators h implies it for all pairs.
  const auto& gens = group->min_generators();
  for (std::size_t g = 0; g < action.size(); ++g)
    for (int h : gens) {
      const Matrix prod = (action[g] * action[static_cast<std::size_t>(h)]).reduce_rows(moduli);
      if (!(prod == action[static_cast<std::size_t>(group->mul(static_cast<int>(g), h))]))
        throw Error("InvalidModule", "action law fails at (" + std::to_string(g) + ", " + std::to_string(h) + ")");
    }
  d_ = std::make_shared<const Data>(Data{std::move(group), std::move(moduli), std::move(action)});
}

std::size_t GModule::free_rank() const {
  return static_cast<std::size_t>(std::count_if(moduli().begin(), moduli().end(), [](const Integer& m) { return m.is_zero(); }));
}

std::vector<std::size_t> GModule::free_coords() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (moduli()[i].is_zero()) out.push_back(i);
  return out;
}

std::vector<std::size_t> GModule::torsion_coords() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!moduli()[i].is_zero()) out.push_back(i);
  return out;
}

Vec GModule::invariant_factors() const {
  Vec t;
  for (const auto& m : moduli())
    if (!m.is_zero()) t.push_back(m);
  if (t.empty()) return {};
  return Subquotient(Lattice::full(t.size()), relation_vectors(t)).invariant_factors();
}

Integer GModule::torsion_order() const {
  Integer o = 1;
  for (const auto& m : moduli())
    if (!m.is_zero()) o *= m;
  return o;
}

bool operator==(const GModule& a, const GModule& b) { return same_module(a, b); }

bool same_module(const GModule& a, const GModule& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  return same_group(*a.group(), *b.group()) && a.moduli() == b.moduli() && a.actions() == b.actions();
}

std::string describe(const GModule& m) {
  std::ostringstream os;
  os << "Z^" << m.free_rank();
  for (const auto& f : m.invariant_factors()) os << " + Z/" << f;
  return os.str();
}

// ---------------------------------------------------------------- GMap

GMap::GMap(GModule source, GModule target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw Error("IllFormedMap", "matrix shape does not match source/target");
  if (!same_group(*source_.group(), *target_.group())) throw Error("GroupMismatch", "map between modules over different groups");
  matrix_ = matrix_.reduce_rows(target_.moduli());
  for (std::size_t i = 0; i < source_.dim(); ++i) {
    const Integer& m = source_.moduli()[i];
    if (m.is_zero()) continue;
    for (std::size_t j = 0; j < target_.dim(); ++j) {
      const Integer v = m * matrix_(j, i);
      const Integer& t = target_.moduli()[j];
      if (t.is_zero() ? !v.is_zero() : !(v % t).is_zero())
        throw Error("IllFormedMap", "relation of source coordinate " + std::to_string(i) + " is not killed");
    }
  }
}

bool GMap::is_equivariant() const {
  for (std::size_t g = 0; g < source_.group()->order(); ++g) {
    const Matrix lhs = (target_.action(static_cast<int>(g)) * matrix_).reduce_rows(target_.moduli());
    const Matrix rhs = (matrix_ * source_.action(static_cast<int>(g))).reduce_rows(target_.moduli());
    if (!(lhs == rhs)) return false;
  }
  return true;
}

GMap identity_map(const GModule& m) { return GMap(m, m, Matrix::identity(m.dim())); }
GMap zero_map(const GModule& s, const GModule& t) { return GMap(s, t, Matrix(t.dim(), s.dim())); }

GMap compose(const GMap& outer, const GMap& inner) {
  if (!same_module(outer.source(), inner.target())) throw Error("NotComposable", "compose: modules do not match");
  return GMap(inner.source(), outer.target(), outer.matrix() * inner.matrix());
}

GMap operator+(const GMap& a, const GMap& b) { return GMap(a.source(), a.target(), a.matrix() + b.matrix()); }
GMap operator-(const GMap& a) { return GMap(a.source(), a.target(), -a.matrix()); }
GMap operator-(const GMap& a, const GMap& b) { return GMap(a.source(), a.target(), a.matrix() - b.matrix()); }

// ---------------------------------------------------------------- standard modules

GModule regular_module(const GroupPtr& g, std::size_t k) {
  const std::size_t n = g->order();
  std::vector<Matrix> act;
  for (std::size_t h = 0; h < n; ++h) {
    Matrix m(k * n, k * n);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t x = 0; x < n; ++x) m(c * n + static_cast<std::size_t>(g->mul(int(h), int(x))), c * n + x) = 1;
    act.push_back(std::move(m));
  }
  return GModule(g, Vec(k * n), std::move(act));
}

GModule trivial_module(const GroupPtr& g) {
  return GModule(g, Vec(1), std::vector<Matrix>(g->order(), Matrix::identity(1)));
}

GModule zero_module(const GroupPtr& g) { return GModule(g, Vec(), std::vector<Matrix>(g->order(), Matrix())); }

GModule permutation_module(const GSet& s) {
  const std::size_t n = s.group()->order(), k = s.size();
  std::vector<Matrix> act;
  for (std::size_t h = 0; h < n; ++h) {
    Matrix m(k, k);
    for (std::size_t p = 0; p < k; ++p) m(static_cast<std::size_t>(s.act(int(h), int(p))), p) = 1;
    act.push_back(std::move(m));
  }
  return GModule(s.group(), Vec(k), std::move(act));
}

GModule augmentation_ideal(const GroupPtr& g) {
  const std::size_t n = g->order();
  std::vector<Matrix> act;
  for (std::size_t h = 0; h < n; ++h) {
    Matrix m(n - 1, n - 1);
    for (std::size_t x = 1; x < n; ++x) {
      const int hx = g->mul(int(h), int(x));
      if (hx != 0) m(static_cast<std::size_t>(hx) - 1, x - 1) += 1;
      if (h != 0) m(h - 1, x - 1) -= 1;
    }
    act.push_back(std::move(m));
  }
  return GModule(g, Vec(n - 1), std::move(act));
}

GModule delta_s(const GSet& s) {
  const std::size_t n = s.group()->order(), k = s.size();
  if (k == 0) throw Error("InvalidModule", "empty G-set");
  std::vector<Matrix> act;
  for (std::size_t h = 0; h < n; ++h) {
    Matrix m(k - 1, k - 1);
    const int hp0 = s.act(int(h), 0);
    for (std::size_t p = 1; p < k; ++p) {
      const int hp = s.act(int(h), int(p));
      if (hp != 0) m(static_cast<std::size_t>(hp) - 1, p - 1) += 1;
      if (hp0 != 0) m(static_cast<std::size_t>(hp0) - 1, p - 1) -= 1;
    }
    act.push_back(std::move(m));
  }
  return GModule(s.group(), Vec(k - 1), std::move(act));
}

GModule cyclic_module(const GroupPtr& g, const Integer& m, const std::vector<Integer>& units) {
  if (units.size() != g->order()) throw Error("InvalidModule", "need one unit per group element");
  std::vector<Matrix> act;
  for (const auto& u : units) {
    if (!m.is_zero() && !gcd(u, m).is_one()) throw Error("InvalidModule", u.str() + " is not a unit mod " + m.str());
    if (m.is_zero() && !u.is_unit()) throw Error("InvalidModule", u.str() + " is not a unit of Z");
    Matrix a(1, 1);
    a(0, 0) = u;
    act.push_back(std::move(a));
  }
  return GModule(g, Vec{m}, std::move(act));
}

GModule dual_lattice(const GModule& m) {
  if (!m.is_lattice()) throw Error("InvalidModule", "dual of a module with torsion");
  std::vector<Matrix> act;
  for (std::size_t g = 0; g < m.group()->order(); ++g) act.push_back(m.action(m.group()->inv(int(g))).transpose());
  return GModule(m.group(), m.moduli(), std::move(act));
}

GModule standard_module(const GroupPtr& g, StandardKind kind, const GSet* s, std::size_t k) {
  switch (kind) {
    case StandardKind::Regular: return regular_module(g, k);
    case StandardKind::Trivial: return trivial_module(g);
    case StandardKind::Augmentation: return augmentation_ideal(g);
    case StandardKind::Permutation:
      if (!s) throw Error("MissingGSet", "permutation module needs a G-set");
      return permutation_module(*s);
    case StandardKind::DeltaS:
      if (!s) throw Error("MissingGSet", "DeltaS needs a G-set");
      return delta_s(*s);
  }
  throw Error("InvalidModule", "unknown kind");
}

GMap augmentation_map(const GroupPtr& g) {
  Matrix m(1, g->order());
  for (std::size_t x = 0; x < g->order(); ++x) m(0, x) = 1;
  return GMap(regular_module(g), trivial_module(g), m);
}

GMap augmentation_inclusion(const GroupPtr& g) {
  const std::size_t n = g->order();
  Matrix m(n, n - 1);
  for (std::size_t x = 1; x < n; ++x) {
    m(x, x - 1) = 1;
    m(0, x - 1) = -1;
  }
  return GMap(augmentation_ideal(g), regular_module(g), m);
}

GMap permutation_augmentation(const GSet& s) {
  Matrix m(1, s.size());
  for (std::size_t p = 0; p < s.size(); ++p) m(0, p) = 1;
  return GMap(permutation_module(s), trivial_module(s.group()), m);
}

GMap delta_s_inclusion(const GSet& s) {
  const std::size_t k = s.size();
  Matrix m(k, k - 1);
  for (std::size_t p = 1; p < k; ++p) {
    m(p, p - 1) = 1;
    m(0, p - 1) = -1;
  }
  return GMap(delta_s(s), permutation_module(s), m);
}

// ---------------------------------------------------------------- tensor

TensorLayout tensor_layout(const GModule& m, const GModule& n) {
  TensorLayout t;
  t.index.assign(m.dim() * n.dim(), -1);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < n.dim(); ++j)
      if (!gcd(m.moduli()[i], n.moduli()[j]).is_one()) {
        t.index[i * n.dim() + j] = static_cast<long>(t.coords.size());
        t.coords.emplace_back(i, j);
      }
  return t;
}

namespace {

// Matrix of a (x) b : M (x) N -> M2 (x) N2 in tensor coordinates.
Matrix tensor_matrix(const GModule& m, const GModule& n, const GModule& m2, const GModule& n2, const Matrix& a,
                     const Matrix& b) {
  const TensorLayout src = tensor_layout(m, n), dst = tensor_layout(m2, n2);
  Matrix out(dst.coords.size(), src.coords.size());
  for (std::size_t c = 0; c < src.coords.size(); ++c) {
    const auto [i, j] = src.coords[c];
    for (std::size_t i2 = 0; i2 < m2.dim(); ++i2) {
      const Integer& x = a(i2, i);
      if (x.is_zero()) continue;
      for (std::size_t j2 = 0; j2 < n2.dim(); ++j2) {
        const Integer& y = b(j2, j);
        if (y.is_zero()) continue;
        const long d = dst.index[i2 * n2.dim() + j2];
        if (d >= 0) out(static_cast<std::size_t>(d), c) += x * y;
      }
    }
  }
  return out;
}

Vec tensor_moduli(const GModule& m, const GModule& n) {
  const TensorLayout t = tensor_layout(m, n);
  Vec mod;
  for (const auto& [i, j] : t.coords) mod.push_back(gcd(m.moduli()[i], n.moduli()[j]));
  return mod;
}

}  // namespace

GModule tensor(const GModule& m, const GModule& n) {
  if (!same_group(*m.group(), *n.group())) throw Error("GroupMismatch", "tensor of modules over different groups");
  std::vector<Matrix> act;
  for (std::size_t g = 0; g < m.group()->order(); ++g)
    act.push_back(tensor_matrix(m, n, m, n, m.action(int(g)), n.action(int(g))));
  return GModule(m.group(), tensor_moduli(m, n), std::move(act));
}

GMap tensor_map(const GMap& f, const GMap& g) {
  return GMap(tensor(f.source(), g.source()), tensor(f.target(), g.target()),
              tensor_matrix(f.source(), g.source(), f.target(), g.target(), f.matrix(), g.matrix()));
}

Vec tensor_element(const GModule& m, const GModule& n, const Vec& x, const Vec& y) {
  const TensorLayout t = tensor_layout(m, n);
  Vec out(t.coords.size());
  for (std::size_t c = 0; c < t.coords.size(); ++c) out[c] = x[t.coords[c].first] * y[t.coords[c].second];
  return reduce_mod(out, tensor_moduli(m, n));
}

// ---------------------------------------------------------------- Hom

std::vector<HomEntry> hom_layout(const GModule& m, const GModule& n) {
  std::vector<HomEntry> out;
  for (std::size_t j = 0; j < n.dim(); ++j)
    for (std::size_t i = 0; i < m.dim(); ++i) {
      const Integer& a = m.moduli()[i];
      const Integer& b = n.moduli()[j];
      if (a.is_zero()) {
        out.push_back({j, i, Integer(1), b});
      } else if (!b.is_zero()) {
        const Integer g = gcd(a, b);
        if (!g.is_one()) out.push_back({j, i, b / g, g});
      }
    }
  return out;
}

namespace {

struct HomIndex {
  std::vector<HomEntry> entries;
  std::vector<long> index;  // row * dimM + col
  std::size_t cols;
};

HomIndex hom_index(const GModule& m, const GModule& n) {
  HomIndex h{hom_layout(m, n), std::vector<long>(m.dim() * n.dim(), -1), m.dim()};
  for (std::size_t c = 0; c < h.entries.size(); ++c) h.index[h.entries[c].row * m.dim() + h.entries[c].col] = static_cast<long>(c);
  return h;
}

Vec hom_moduli(const HomIndex& h) {
  Vec mod;
  for (const auto& e : h.entries) mod.push_back(e.modulus);
  return mod;
}

// Coordinates of a matrix F: M -> N (entries taken modulo the target moduli).
Vec matrix_to_coords(const GModule& n, const HomIndex& h, const Matrix& f) {
  Vec out(h.entries.size());
  for (std::size_t j = 0; j < f.rows(); ++j)
    for (std::size_t i = 0; i < f.cols(); ++i) {
      const Integer v = reduce_mod(f(j, i), n.moduli()[j]);
      if (v.is_zero()) continue;
      const long c = h.index[j * h.cols + i];
      if (c < 0) throw Error("IllFormedMap", "matrix entry (" + std::to_string(j) + ", " + std::to_string(i) + ") not allowed");
      const auto& e = h.entries[static_cast<std::size_t>(c)];
      if (!(v % e.unit).is_zero()) throw Error("IllFormedMap", "entry not a multiple of its unit");
      out[static_cast<std::size_t>(c)] = reduce_mod(v / e.unit, e.modulus);
    }
  return out;
}

// Matrix of F -> b F a from Hom(M, N) to Hom(M2, N2), with a: M2 -> M, b: N -> N2.
Matrix sandwich(const GModule& m, const GModule& n, const GModule& m2, const GModule& n2, const Matrix& a, const Matrix& b) {
  const HomIndex src = hom_index(m, n), dst = hom_index(m2, n2);
  Matrix out(dst.entries.size(), src.entries.size());
  std::vector<std::pair<std::size_t, Integer>> brow, arow;
  for (std::size_t c = 0; c < src.entries.size(); ++c) {
    const auto& e = src.entries[c];
    // b[:, row] * unit * a[col, :]
    brow.clear();
    arow.clear();
    for (std::size_t j2 = 0; j2 < n2.dim(); ++j2)
      if (!b(j2, e.row).is_zero()) brow.emplace_back(j2, b(j2, e.row));
    for (std::size_t i2 = 0; i2 < m2.dim(); ++i2)
      if (!a(e.col, i2).is_zero()) arow.emplace_back(i2, a(e.col, i2));
    for (const auto& [j2, x] : brow)
      for (const auto& [i2, y] : arow) {
        Integer v = reduce_mod(x * e.unit * y, n2.moduli()[j2]);
        if (v.is_zero()) continue;
        const long d = dst.index[j2 * dst.cols + i2];
        if (d < 0) throw Error("IllFormedMap", "induced Hom map leaves the admitted entries");
        const auto& de = dst.entries[static_cast<std::size_t>(d)];
        if (!(v % de.unit).is_zero()) throw Error("IllFormedMap", "induced Hom entry not a multiple of its unit");
        out(static_cast<std::size_t>(d), c) += v / de.unit;
      }
  }
  return out.reduce_rows(hom_moduli(dst));
}

}  // namespace

GModule hom_module(const GModule& m, const GModule& n) {
  if (!same_group(*m.group(), *n.group())) throw Error("GroupMismatch", "Hom of modules over different groups");
  const auto& g = m.group();
  const HomIndex h = hom_index(m, n);
  std::vector<Matrix> act;
  for (std::size_t x = 0; x < g->order(); ++x)
    act.push_back(sandwich(m, n, m, n, m.action(g->inv(int(x))), n.action(int(x))));
  return GModule(g, hom_moduli(h), std::move(act));
}

Matrix hom_to_matrix(const GModule& m, const GModule& n, const Vec& coords) {
  const auto entries = hom_layout(m, n);
  Matrix f(n.dim(), m.dim());
  for (std::size_t c = 0; c < entries.size(); ++c) f(entries[c].row, entries[c].col) = coords[c] * entries[c].unit;
  return f.reduce_rows(n.moduli());
}

Vec hom_from_matrix(const GModule& m, const GModule& n, const Matrix& f) {
  return matrix_to_coords(n, hom_index(m, n), f);
}

GMap hom_map(const GMap& f, const GMap& g) {
  // f: M' -> M, g: N -> N'
  return GMap(hom_module(f.target(), g.source()), hom_module(f.source(), g.target()),
              sandwich(f.target(), g.source(), f.source(), g.target(), f.matrix(), g.matrix()));
}

GMap hom_left(const GMap& f, const GModule& n) { return hom_map(f, identity_map(n)); }
GMap hom_right(const GModule& m, const GMap& g) { return hom_map(identity_map(m), g); }

// ---------------------------------------------------------------- sums

DirectSum direct_sum(const GroupPtr& g, const std::vector<GModule>& parts) {
  Vec mod;
  for (const auto& p : parts) {
    if (!same_group(*p.group(), *g)) throw Error("GroupMismatch", "direct sum over different groups");
    mod.insert(mod.end(), p.moduli().begin(), p.moduli().end());
  }
  std::vector<Matrix> act;
  for (std::size_t x = 0; x < g->order(); ++x) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.action(int(x)));
    act.push_back(Matrix::block_diag(blocks));
  }
  DirectSum s{GModule(g, mod, std::move(act)), {}, {}};
  std::size_t off = 0;
  for (const auto& p : parts) {
    Matrix inc(s.module.dim(), p.dim()), proj(p.dim(), s.module.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) {
      inc(off + i, i) = 1;
      proj(i, off + i) = 1;
    }
    s.inclusions.emplace_back(p, s.module, inc);
    s.projections.emplace_back(s.module, p, proj);
    off += p.dim();
  }
  return s;
}

GModule add_free(const GModule& m, std::size_t k) {
  if (k == 0) return m;
  return direct_sum(m.group(), {m, regular_module(m.group(), k)}).module;
}

// ---------------------------------------------------------------- kernels and cokernels

namespace {

GModule module_from_subquotient(const GModule& parent, const Subquotient& sq) {
  std::vector<Matrix> act;
  const auto& gens = sq.generators();
  for (std::size_t x = 0; x < parent.group()->order(); ++x) {
    Matrix a(gens.size(), gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) a.set_column(k, sq.encode(parent.action(int(x)) * gens[k]));
    act.push_back(std::move(a));
  }
  return GModule(parent.group(), sq.orders(), std::move(act));
}

Sub sub_from(const GModule& parent, const Subquotient& sq) {
  GModule m = module_from_subquotient(parent, sq);
  Matrix inc(parent.dim(), m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k) inc.set_column(k, sq.generators()[k]);
  return {m, GMap(m, parent, inc)};
}

std::vector<Vec> columns(const Matrix& a) {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a.column(j));
  return out;
}

}  // namespace

Sub kernel(const GMap& f) {
  const GModule& s = f.source();
  Subquotient sq(kernel_lattice(f.matrix(), f.target().moduli()), s.relations());
  return sub_from(s, sq);
}

Sub image(const GMap& f) {
  const GModule& t = f.target();
  auto gens = columns(f.matrix());
  for (auto& r : t.relations()) gens.push_back(std::move(r));
  Subquotient sq(Lattice::from_generators(t.dim(), gens), t.relations());
  return sub_from(t, sq);
}

Quot cokernel(const GMap& f) {
  const GModule& t = f.target();
  auto den = columns(f.matrix());
  for (auto& r : t.relations()) den.push_back(std::move(r));
  Subquotient sq(Lattice::full(t.dim()), den);
  GModule q = module_from_subquotient(t, sq);
  Matrix proj(q.dim(), t.dim());
  for (std::size_t c = 0; c < t.dim(); ++c) proj.set_column(c, sq.encode(unit_vec(t.dim(), c)));
  return {q, GMap(t, q, proj), Matrix::from_columns(t.dim(), sq.generators())};
}

KernelImageCokernel map_kernel_image_cokernel(const GMap& f) { return {kernel(f), image(f), cokernel(f)}; }

GModule restrict_module(const GModule& m, const Subgroup& h) {
  if (!same_group(*h.parent(), *m.group())) throw Error("GroupMismatch", "restriction to a subgroup of another group");
  std::vector<Matrix> act;
  for (int x : h.members()) act.push_back(m.action(x));
  return GModule(h.as_group(), m.moduli(), std::move(act));
}

GMap restrict_map(const GMap& f, const Subgroup& h) {
  return GMap(restrict_module(f.source(), h), restrict_module(f.target(), h), f.matrix());
}

TorsionSplit torsion_split(const GModule& m) {
  const auto tc = m.torsion_coords(), fc = m.free_coords();
  const auto& g = m.group();
  std::vector<Matrix> tact, fact;
  Vec tmod;
  for (auto i : tc) tmod.push_back(m.moduli()[i]);
  for (std::size_t x = 0; x < g->order(); ++x) {
    tact.push_back(m.action(int(x)).submatrix(tc, tc));
    fact.push_back(m.action(int(x)).submatrix(fc, fc));
  }
  GModule tor(g, tmod, std::move(tact)), lat(g, Vec(fc.size()), std::move(fact));
  Matrix inc(m.dim(), tc.size()), proj(fc.size(), m.dim());
  for (std::size_t k = 0; k < tc.size(); ++k) inc(tc[k], k) = 1;
  for (std::size_t k = 0; k < fc.size(); ++k) proj(k, fc[k]) = 1;
  return {{tor, GMap(tor, m, inc)}, {lat, GMap(m, lat, proj), proj.transpose()}};
}

bool same_subgroup(const GModule& m, const std::vector<Vec>& a, const std::vector<Vec>& b) {
  auto rel = m.relations();
  std::vector<Vec> aa(a), bb(b);
  aa.insert(aa.end(), rel.begin(), rel.end());
  bb.insert(bb.end(), rel.begin(), rel.end());
  return Lattice::from_generators(m.dim(), aa) == Lattice::from_generators(m.dim(), bb);
}

ExactVerdict check_exact(const std::vector<GMap>& seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!same_module(seq[i].target(), seq[i + 1].source()))
      throw Error("NotComposable", "maps " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not compose");
  if (seq.empty()) return {};
  auto first_missing = [](const Lattice& big, const std::vector<Vec>& small) -> std::optional<Vec> {
    for (const auto& v : small)
      if (!big.contains(v)) return v;
    return std::nullopt;
  };
  // injectivity of the first map
  {
    const GModule& s = seq.front().source();
    const Lattice ker = kernel_lattice(seq.front().matrix(), seq.front().target().moduli());
    const Lattice rel = Lattice::from_generators(s.dim(), s.relations());
    if (auto w = first_missing(rel, ker.basis())) return {false, "M0 (injectivity)", to_string(*w)};
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const GModule& b = seq[i].target();
    auto gens = columns(seq[i].matrix());
    for (auto& r : b.relations()) gens.push_back(std::move(r));
    const Lattice im = Lattice::from_generators(b.dim(), gens);
    const Lattice ker = kernel_lattice(seq[i + 1].matrix(), seq[i + 1].target().moduli());
    const std::string node = "M" + std::to_string(i + 1);
    if (auto w = first_missing(ker, im.basis())) return {false, node + " (image not in kernel)", to_string(*w)};
    if (auto w = first_missing(im, ker.basis())) return {false, node + " (kernel not in image)", to_string(*w)};
  }
  {
    const GMap& last = seq.back();
    auto gens = columns(last.matrix());
    for (auto& r : last.target().relations()) gens.push_back(std::move(r));
    const Lattice im = Lattice::from_generators(last.target().dim(), gens);
    for (std::size_t c = 0; c < last.target().dim(); ++c)
      if (!im.contains(unit_vec(last.target().dim(), c)))
        return {false, "M" + std::to_string(seq.size()) + " (surjectivity)", to_string(unit_vec(last.target().dim(), c))};
  }
  return {};
}

}  // namespace galstruct
