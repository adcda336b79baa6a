#include "galstruct/cohomology.hpp"

#include "galstruct/error.hpp"
#include "galstruct/resolution.hpp"

#include <sstream>

namespace galstruct {

// ---------------------------------------------------------------- QmodZ

QmodZ::QmodZ(const Integer& num, const Integer& den) {
  if (den.sign() <= 0) throw Error("InvalidFraction", "denominator must be positive");
  Integer p = mod_floor(num, den);
  const Integer g = gcd(p, den);
  if (p.is_zero()) {
    num_ = 0;
    den_ = 1;
  } else {
    num_ = p / g;
    den_ = den / g;
  }
}

std::string QmodZ::str() const { return num_.str() + "/" + den_.str(); }

QmodZ QmodZ::parse(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) throw Error("InvalidFraction", "expected p/q, got '" + s + "'");
  return QmodZ(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

QmodZ operator+(const QmodZ& a, const QmodZ& b) {
  return QmodZ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
QmodZ operator-(const QmodZ& a) { return QmodZ(-a.num_, a.den_); }
QmodZ operator*(const Integer& k, const QmodZ& a) { return QmodZ(k * a.num_, a.den_); }

// ---------------------------------------------------------------- AbelianHom

AbelianHom::AbelianHom(Vec source_orders, Vec target_orders, Matrix m)
    : src_(std::move(source_orders)), dst_(std::move(target_orders)), m_(std::move(m)) {
  if (m_.rows() != dst_.size() || m_.cols() != src_.size()) throw Error("IllFormedMap", "AbelianHom shape mismatch");
  m_ = m_.reduce_rows(dst_);
  for (std::size_t i = 0; i < src_.size(); ++i) {
    if (src_[i].is_zero()) continue;
    for (std::size_t j = 0; j < dst_.size(); ++j) {
      const Integer v = src_[i] * m_(j, i);
      if (dst_[j].is_zero() ? !v.is_zero() : !(v % dst_[j]).is_zero())
        throw Error("IllFormedMap", "AbelianHom does not respect the order of generator " + std::to_string(i));
    }
  }
}

bool AbelianHom::is_injective() const {
  const Lattice ker = kernel_lattice(m_, dst_);
  const Lattice rel = Lattice::from_generators(src_.size(), relation_vectors(src_));
  return rel.contains_lattice(ker);
}

bool AbelianHom::is_surjective() const {
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < m_.cols(); ++j) gens.push_back(m_.column(j));
  for (auto& r : relation_vectors(dst_)) gens.push_back(std::move(r));
  const Lattice im = Lattice::from_generators(dst_.size(), gens);
  return im.rank() == dst_.size() && im.contains_lattice(Lattice::full(dst_.size()));
}

bool AbelianHom::is_zero() const { return m_.is_zero(); }

std::optional<Vec> AbelianHom::preimage(const Vec& y) const {
  LinearSolver s(m_, dst_);
  auto x = s.solve(y);
  if (!x) return std::nullopt;
  return reduce_mod(*x, src_);
}

bool operator==(const AbelianHom& a, const AbelianHom& b) {
  return a.src_ == b.src_ && a.dst_ == b.dst_ && a.m_ == b.m_;
}

AbelianHom compose(const AbelianHom& outer, const AbelianHom& inner) {
  if (outer.source_orders() != inner.target_orders()) throw Error("NotComposable", "AbelianHom orders do not match");
  return AbelianHom(inner.source_orders(), outer.target_orders(), outer.matrix() * inner.matrix());
}

AbelianHom identity_hom(const Vec& orders) { return AbelianHom(orders, orders, Matrix::identity(orders.size())); }

AbelianHom inverse(const AbelianHom& f) {
  if (!f.is_bijective()) throw Error("NotAnIsomorphism", "map of abelian groups is not bijective");
  const std::size_t k = f.target_orders().size();
  LinearSolver s(f.matrix(), f.target_orders());
  Matrix inv(f.source_orders().size(), k);
  for (std::size_t j = 0; j < k; ++j) {
    auto x = s.solve(unit_vec(k, j));
    inv.set_column(j, reduce_mod(*x, f.source_orders()));
  }
  return AbelianHom(f.target_orders(), f.source_orders(), inv);
}

void require_finite(const Vec& orders) {
  for (const auto& o : orders)
    if (o.is_zero()) throw Error("InfiniteGroup", "group has a free factor");
}

std::vector<Vec> enumerate_elements(const Vec& orders) {
  require_finite(orders);
  std::vector<Vec> out;
  Vec x(orders.size());
  while (true) {
    out.push_back(x);
    std::size_t i = orders.size();
    while (i > 0) {
      --i;
      x[i] += 1;
      if (x[i] < orders[i]) break;
      x[i] = 0;
      if (i == 0) return out;
    }
    if (orders.empty()) return out;
  }
}

// ---------------------------------------------------------------- cochains

namespace {

std::size_t cochain_components(const GModule& a, int k) {
  if (k <= 0) return 1;
  return a.group()->resolution().ranks[static_cast<std::size_t>(k)];
}

Vec tile(const Vec& v, std::size_t times) {
  Vec out;
  out.reserve(v.size() * times);
  for (std::size_t t = 0; t < times; ++t) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<Vec> columns_of(const Matrix& a) {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a.column(j));
  return out;
}

Matrix norm_matrix(const GModule& a) {
  Matrix n(a.dim(), a.dim());
  for (const auto& m : a.actions()) n = n + m;
  return n.reduce_rows(a.moduli());
}

// Stack of (rho(g) - 1) over the chosen generators.
Matrix fixed_point_matrix(const GModule& a) {
  const auto& gens = a.group()->min_generators();
  const std::size_t d = a.dim();
  Matrix m(gens.size() * d, d);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Matrix& r = a.action(gens[k]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(k * d + i, j) = r(i, j) - (i == j ? 1 : 0);
  }
  return m;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Matrix coboundary_matrix(const GModule& a, int k) {
  if (k < 0 || k > 2) throw Error("UnsupportedDegree", "coboundary in degree " + std::to_string(k));
  const Resolution& res = a.group()->resolution();
  const std::size_t d = a.dim(), n = res.n;
  const std::size_t rk = res.ranks[static_cast<std::size_t>(k)], rk1 = res.ranks[static_cast<std::size_t>(k + 1)];
  Matrix m(rk1 * d, rk * d);
  for (std::size_t i = 0; i < rk1; ++i) {
    const Vec& b = res.boundary[static_cast<std::size_t>(k + 1)][i];
    for (std::size_t j = 0; j < rk; ++j)
      for (std::size_t g = 0; g < n; ++g) {
        const Integer& c = b[j * n + g];
        if (c.is_zero()) continue;
        const Matrix& r = a.action(static_cast<int>(g));
        for (std::size_t x = 0; x < d; ++x)
          for (std::size_t y = 0; y < d; ++y)
            if (!r(x, y).is_zero()) m(i * d + x, j * d + y) += c * r(x, y);
      }
  }
  return m.reduce_rows(tile(a.moduli(), rk1));
}

Vec apply_on_cochain(const GMap& f, int k, const Vec& cochain) {
  const std::size_t comps = cochain_components(f.source(), k);
  const std::size_t ds = f.source().dim(), dt = f.target().dim();
  if (cochain.size() != comps * ds) throw Error("IllFormedMap", "cochain has wrong length");
  Vec out(comps * dt);
  for (std::size_t c = 0; c < comps; ++c) {
    Vec part(cochain.begin() + static_cast<std::ptrdiff_t>(c * ds), cochain.begin() + static_cast<std::ptrdiff_t>((c + 1) * ds));
    Vec img = f(part);
    std::copy(img.begin(), img.end(), out.begin() + static_cast<std::ptrdiff_t>(c * dt));
  }
  return out;
}

// ---------------------------------------------------------------- CohGroup

namespace {

struct CocycleTest {
  Matrix z;
  Vec z_moduli;
  std::vector<Vec> boundaries;
};

CocycleTest cocycle_test(const GModule& a, int degree) {
  const Resolution& res = a.group()->resolution();
  CocycleTest t;
  switch (degree) {
    case -1: {
      t.z = norm_matrix(a);
      t.z_moduli = a.moduli();
      for (int g : a.group()->min_generators()) {
        Matrix m = a.action(g) - Matrix::identity(a.dim());
        for (auto& c : columns_of(m)) t.boundaries.push_back(std::move(c));
      }
      break;
    }
    case 0: {
      t.z = fixed_point_matrix(a);
      t.z_moduli = tile(a.moduli(), a.group()->min_generators().size());
      t.boundaries = columns_of(norm_matrix(a));
      break;
    }
    case 1:
    case 2: {
      t.z = coboundary_matrix(a, degree);
      t.z_moduli = tile(a.moduli(), res.ranks[static_cast<std::size_t>(degree + 1)]);
      t.boundaries = columns_of(coboundary_matrix(a, degree - 1));
      break;
    }
    default:
      throw Error("UnsupportedDegree", "Tate cohomology is implemented for degrees -1..2, not " + std::to_string(degree));
  }
  return t;
}

}  // namespace

CohGroup::CohGroup(const GModule& a, int degree) : a_(a), degree_(degree) {
  CocycleTest t = cocycle_test(a, degree);
  moduli_ = tile(a.moduli(), cochain_components(a, degree));
  auto den = std::move(t.boundaries);
  for (auto& r : relation_vectors(moduli_)) den.push_back(std::move(r));
  q_ = Subquotient(kernel_lattice(t.z, t.z_moduli), den);
}

bool CohGroup::is_cocycle(const Vec& c) const {
  if (c.size() != moduli_.size()) return false;
  return q_.numerator().contains(c);
}

std::optional<Vec> CohGroup::try_encode(const Vec& cocycle) const {
  if (cocycle.size() != moduli_.size()) return std::nullopt;
  return q_.try_encode(cocycle);
}

Vec CohGroup::encode(const Vec& cocycle) const {
  auto c = try_encode(cocycle);
  if (!c) throw Error("NotACocycle", "cochain " + to_string(cocycle) + " is not a cocycle in degree " + std::to_string(degree_));
  return *c;
}

bool CohGroup::is_coboundary(const Vec& c) const {
  auto e = try_encode(c);
  return e && is_zero(*e);
}

Vec CohGroup::lift(const Vec& coords) const { return reduce_mod(q_.lift(coords), moduli_); }

std::vector<Vec> CohGroup::basis_cocycles() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < num_factors(); ++i) out.push_back(lift(unit_vec(num_factors(), i)));
  return out;
}

Vec CohGroup::from_bar(const std::vector<Vec>& values) const {
  if (degree_ < 1) throw Error("UnsupportedDegree", "bar cochains are used in degrees 1 and 2");
  const Resolution& res = a_.group()->resolution();
  const std::size_t n = res.n, d = a_.dim(), k = static_cast<std::size_t>(degree_);
  const std::size_t block = ipow(n, k);
  if (values.size() != block) throw Error("NotACocycle", "inhomogeneous cochain has wrong number of values");
  Vec out(res.ranks[k] * d);
  for (std::size_t i = 0; i < res.ranks[k]; ++i) {
    const Vec& phi = res.phi[k][i];
    Vec acc(d);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t t = 0; t < block; ++t) {
        const Integer& c = phi[x * block + t];
        if (c.is_zero()) continue;
        axpy(acc, c, a_.action(static_cast<int>(x)) * values[t]);
      }
    acc = a_.reduce(acc);
    std::copy(acc.begin(), acc.end(), out.begin() + static_cast<std::ptrdiff_t>(i * d));
  }
  return out;
}

std::vector<Vec> CohGroup::to_bar(const Vec& cochain) const {
  if (degree_ < 1) throw Error("UnsupportedDegree", "bar cochains are used in degrees 1 and 2");
  const Resolution& res = a_.group()->resolution();
  const std::size_t n = res.n, d = a_.dim(), k = static_cast<std::size_t>(degree_);
  std::vector<Vec> parts;
  for (std::size_t j = 0; j < res.ranks[k]; ++j)
    parts.emplace_back(cochain.begin() + static_cast<std::ptrdiff_t>(j * d), cochain.begin() + static_cast<std::ptrdiff_t>((j + 1) * d));
  std::vector<Vec> out;
  for (std::size_t t = 0; t < ipow(n, k); ++t) {
    const Vec& psi = res.psi[k][t];
    Vec acc(d);
    for (std::size_t j = 0; j < res.ranks[k]; ++j)
      for (std::size_t y = 0; y < n; ++y) {
        const Integer& c = psi[j * n + y];
        if (!c.is_zero()) axpy(acc, c, a_.action(static_cast<int>(y)) * parts[j]);
      }
    out.push_back(a_.reduce(acc));
  }
  return out;
}

AbelianHom induced(const GMap& f, const CohGroup& src, const CohGroup& dst) {
  if (src.degree() != dst.degree()) throw Error("DegreeMismatch", "induced map between different degrees");
  if (!same_module(f.source(), src.coefficients()) || !same_module(f.target(), dst.coefficients()))
    throw Error("NotComposable", "induced: map does not match the coefficient modules");
  if (!f.is_equivariant()) throw Error("NotEquivariant", "induced map needs an equivariant map");
  Matrix m(dst.num_factors(), src.num_factors());
  for (std::size_t i = 0; i < src.num_factors(); ++i)
    m.set_column(i, dst.encode(apply_on_cochain(f, src.degree(), src.lift(unit_vec(src.num_factors(), i)))));
  return AbelianHom(src.orders(), dst.orders(), m);
}

AbelianHom connecting(const GMap& i, const GMap& p, const CohGroup& src, const CohGroup& dst) {
  const int r = src.degree();
  if (r < 0 || r > 1 || dst.degree() != r + 1) throw Error("UnsupportedDegree", "connecting map from degree " + std::to_string(r));
  if (!same_module(p.target(), src.coefficients()) || !same_module(i.source(), dst.coefficients()) ||
      !same_module(i.target(), p.source()))
    throw Error("NotComposable", "connecting: sequence does not match the cohomology groups");
  const GModule& b = p.source();
  const GModule& c = p.target();
  const GModule& a = i.source();
  // integer-linear lift along p
  LinearSolver ps(p.matrix(), c.moduli());
  std::vector<Vec> sigma;
  for (std::size_t k = 0; k < c.dim(); ++k) {
    auto x = ps.solve(unit_vec(c.dim(), k));
    if (!x) throw Error("HomNotExact", "coordinate " + std::to_string(k) + " does not lift along the surjection");
    sigma.push_back(std::move(*x));
  }
  LinearSolver is(i.matrix(), b.moduli());
  const Matrix delta = coboundary_matrix(b, r);
  const std::size_t comps_in = cochain_components(c, r), comps_out = cochain_components(a, r + 1);
  Matrix m(dst.num_factors(), src.num_factors());
  for (std::size_t col = 0; col < src.num_factors(); ++col) {
    const Vec f = src.lift(unit_vec(src.num_factors(), col));
    Vec lifted(comps_in * b.dim());
    for (std::size_t q = 0; q < comps_in; ++q)
      for (std::size_t k = 0; k < c.dim(); ++k) {
        const Integer& x = f[q * c.dim() + k];
        if (x.is_zero()) continue;
        for (std::size_t t = 0; t < b.dim(); ++t)
          if (!sigma[k][t].is_zero()) lifted[q * b.dim() + t] += x * sigma[k][t];
      }
    const Vec db = delta * lifted;
    Vec pulled(comps_out * a.dim());
    for (std::size_t q = 0; q < comps_out; ++q) {
      Vec part(db.begin() + static_cast<std::ptrdiff_t>(q * b.dim()), db.begin() + static_cast<std::ptrdiff_t>((q + 1) * b.dim()));
      auto x = is.solve(b.reduce(part));
      if (!x) throw Error("HomNotExact", "coboundary of the lift does not come from the kernel");
      Vec xr = a.reduce(*x);
      std::copy(xr.begin(), xr.end(), pulled.begin() + static_cast<std::ptrdiff_t>(q * a.dim()));
    }
    m.set_column(col, dst.encode(pulled));
  }
  return AbelianHom(src.orders(), dst.orders(), m);
}

TrivialityVerdict is_cohomologically_trivial(const GModule& m) {
  for (const auto& h : subgroups(m.group())) {
    if (h.order() == 1) continue;
    const GModule res = restrict_module(m, h);
    for (int r : {0, 1, 2, -1}) {
      CohGroup c(res, r);
      if (!c.is_trivial()) return {false, h.members(), r, c.orders()};
    }
  }
  return {};
}

// ---------------------------------------------------------------- characters

QmodZ Character::operator()(const Vec& x) const {
  QmodZ s;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!x[i].is_zero()) s = s + x[i] * values[i];
  return s;
}

std::vector<Character> character_group(const Vec& orders) {
  std::vector<Character> out;
  for (const auto& e : enumerate_elements(orders)) {
    Character chi;
    for (std::size_t i = 0; i < orders.size(); ++i) chi.values.emplace_back(e[i], orders[i]);
    out.push_back(std::move(chi));
  }
  return out;
}

Character dualize(const AbelianHom& f, const Character& chi) {
  Character out;
  for (std::size_t i = 0; i < f.source_orders().size(); ++i) out.values.push_back(chi(f.matrix().column(i)));
  return out;
}

Character scale(const Integer& k, const Character& chi) {
  Character out;
  for (const auto& v : chi.values) out.values.push_back(k * v);
  return out;
}

std::string to_string(const Character& chi) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < chi.values.size(); ++i) os << (i ? "," : "") << chi.values[i].str();
  os << ']';
  return os.str();
}

QmodZ trace_character(const Matrix& f, std::size_t group_order) {
  return QmodZ(f.trace(), Integer(static_cast<long long>(group_order)));
}

}  // namespace galstruct
