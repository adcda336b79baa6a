#include "galstruct/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace galstruct {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator-(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -a[i];
  return r;
}

Vec operator*(const Integer& s, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vec& a, const Integer& s, const Vec& b) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
}

Integer dot(const Vec& a, const Vec& b) {
  Integer r;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) r += a[i] * b[i];
  return r;
}

Vec reduce_mod(const Vec& v, const Vec& moduli) {
  if (v.size() != moduli.size()) throw std::invalid_argument("reduce_mod: length mismatch");
  Vec r(v);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = reduce_mod(r[i], moduli[i]);
  return r;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x.is_zero(); });
}

Integer Matrix::trace() const {
  Integer t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Integer& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (!a.is_zero() && !v[k].is_zero()) r[i] += a * v[k];
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
  return r;
}

Matrix operator*(const Integer& s, const Matrix& m) {
  Matrix r(m);
  for (auto& x : r.data_) x *= s;
  return r;
}

Matrix Matrix::reduce_rows(const Vec& moduli) const {
  Matrix r(*this);
  for (std::size_t i = 0; i < rows_; ++i)
    if (!moduli[i].is_zero())
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = mod_floor(r(i, j), moduli[i]);
  return r;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const Integer& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l)
          if (!b(k, l).is_zero()) r(i * b.rows_ + k, j * b.cols_ + l) = x * b(k, l);
    }
  return r;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows_;
    c += b.cols_;
  }
  Matrix m(r, c);
  std::size_t ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) m(ro + i, co + j) = b(i, j);
    ro += b.rows_;
    co += b.cols_;
  }
  return m;
}

Matrix Matrix::hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return {};
  const std::size_t r = blocks.front().rows_;
  std::size_t c = 0;
  for (const auto& b : blocks) {
    if (b.rows_ != r) throw std::invalid_argument("hstack row mismatch");
    c += b.cols_;
  }
  Matrix m(r, c);
  std::size_t co = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, co + j) = b(i, j);
    co += b.cols_;
  }
  return m;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return {};
  const std::size_t c = blocks.front().cols_;
  std::size_t r = 0;
  for (const auto& b : blocks) {
    if (b.cols_ != c) throw std::invalid_argument("vstack column mismatch");
    r += b.rows_;
  }
  Matrix m(r, c);
  std::size_t ro = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < c; ++j) m(ro + i, j) = b(i, j);
    ro += b.rows_;
  }
  return m;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  Matrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
  return m;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? "," : "") << to_string(m.row(i));
  os << ']';
  return os.str();
}

Integer determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Matrix a(m);
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t s = k + 1;
      while (s < n && a(s, k).is_zero()) ++s;
      if (s == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(s, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

// ---------------------------------------------------------------- Lattice

namespace {

std::optional<std::size_t> leading(const Vec& v, std::size_t from, std::size_t key_len) {
  for (std::size_t i = from; i < key_len; ++i)
    if (!v[i].is_zero()) return i;
  return std::nullopt;
}

void sub_scaled(Vec& a, const Integer& q, const Vec& b, std::size_t from) {
  if (q.is_zero()) return;
  for (std::size_t i = from; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] -= q * b[i];
}

// Inserts v into an echelon basis whose pivots are searched among the first
// key_len coordinates. Returns true if the span changed. A vector whose key
// part reduces to zero is discarded.
bool echelon_insert(std::vector<Vec>& rows, std::vector<std::size_t>& pivots, Vec v, std::size_t key_len) {
  bool changed = false;
  std::size_t i = 0;
  std::size_t from = 0;
  while (true) {
    const auto lead = leading(v, from, key_len);
    if (!lead) return changed;
    from = *lead;
    while (i < rows.size() && pivots[i] < *lead) ++i;
    if (i == rows.size() || pivots[i] > *lead) {
      if (v[*lead].sign() < 0)
        for (auto& x : v) x = -x;
      rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(i), std::move(v));
      pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(i), *lead);
      return true;
    }
    Vec& row = rows[i];
    const Integer a = row[*lead];
    const Integer b = v[*lead];
    if ((b % a).is_zero()) {
      sub_scaled(v, b / a, row, *lead);
      continue;
    }
    const ExtendedGcd eg = extended_gcd(a, b);
    const Integer ag = a / eg.g;
    const Integer bg = b / eg.g;
    Vec new_row(row.size());
    Vec new_v(row.size());
    for (std::size_t k = *lead; k < row.size(); ++k) {
      if (row[k].is_zero() && v[k].is_zero()) continue;
      new_row[k] = eg.x * row[k] + eg.y * v[k];
      new_v[k] = ag * v[k] - bg * row[k];
    }
    row = std::move(new_row);
    v = std::move(new_v);
    changed = true;
  }
}

void echelon_reduce(std::vector<Vec>& rows, const std::vector<std::size_t>& pivots) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t p = pivots[i];
    const Integer& piv = rows[i][p];
    for (std::size_t j = 0; j < i; ++j) {
      const Integer q = floor_div(rows[j][p], piv);
      if (!q.is_zero()) sub_scaled(rows[j], q, rows[i], p);
    }
  }
}

}  // namespace

Lattice Lattice::from_generators(std::size_t ambient, const std::vector<Vec>& gens) {
  Lattice l(ambient);
  for (const auto& g : gens) {
    if (g.size() != ambient) throw std::invalid_argument("lattice generator has wrong length");
    l.insert(g);
  }
  l.reduce();
  return l;
}

Lattice Lattice::full(std::size_t ambient) {
  Lattice l(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    l.rows_.push_back(unit_vec(ambient, i));
    l.pivots_.push_back(i);
  }
  return l;
}

bool Lattice::insert(Vec v) {
  if (v.size() != ambient_) throw std::invalid_argument("lattice vector has wrong length");
  return echelon_insert(rows_, pivots_, std::move(v), ambient_);
}

void Lattice::reduce() { echelon_reduce(rows_, pivots_); }

std::optional<Vec> Lattice::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("lattice vector has wrong length");
  Vec r(v);
  Vec c(rows_.size());
  std::size_t from = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    for (std::size_t k = from; k < p; ++k)
      if (!r[k].is_zero()) return std::nullopt;
    const Integer& piv = rows_[i][p];
    if (!(r[p] % piv).is_zero()) return std::nullopt;
    c[i] = r[p] / piv;
    sub_scaled(r, c[i], rows_[i], p);
    from = p + 1;
  }
  for (std::size_t k = from; k < ambient_; ++k)
    if (!r[k].is_zero()) return std::nullopt;
  return c;
}

bool Lattice::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Lattice::contains_lattice(const Lattice& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vec& r) { return contains(r); });
}

bool operator==(const Lattice& a, const Lattice& b) {
  return a.ambient_ == b.ambient_ && a.rank() == b.rank() && a.contains_lattice(b) && b.contains_lattice(a);
}

std::vector<Vec> relation_vectors(const Vec& moduli) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < moduli.size(); ++i)
    if (!moduli[i].is_zero()) out.push_back(moduli[i] * unit_vec(moduli.size(), i));
  return out;
}

Lattice column_lattice(const Matrix& a) {
  std::vector<Vec> cols;
  cols.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
  return Lattice::from_generators(a.rows(), cols);
}

Lattice kernel_lattice(const Matrix& a, const Vec& row_moduli) {
  const std::size_t n = a.cols();
  if (row_moduli.size() != a.rows()) throw std::invalid_argument("kernel_lattice: moduli length mismatch");
  std::vector<Vec> basis;
  basis.reserve(n);
  for (std::size_t j = 0; j < n; ++j) basis.push_back(unit_vec(n, j));

  std::vector<std::pair<std::size_t, Integer>> support;
  std::vector<Integer> vals;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    support.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (!a(i, j).is_zero()) support.emplace_back(j, a(i, j));
    if (support.empty()) continue;
    const Integer& d = row_moduli[i];
    vals.assign(basis.size(), Integer());
    std::vector<std::size_t> active;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Integer v;
      for (const auto& [j, x] : support)
        if (!basis[b][j].is_zero()) v += x * basis[b][j];
      if (!d.is_zero()) v = mod_floor(v, d);
      vals[b] = v;
      if (!v.is_zero()) active.push_back(b);
    }
    if (active.empty()) continue;
    // Euclid across the active basis vectors.
    while (active.size() > 1) {
      std::size_t p = active.front();
      for (std::size_t b : active)
        if (abs(vals[b]) < abs(vals[p])) p = b;
      std::vector<std::size_t> next{p};
      for (std::size_t b : active) {
        if (b == p) continue;
        const Integer q = vals[b] / vals[p];
        if (!q.is_zero()) {
          axpy(basis[b], -q, basis[p]);
          vals[b] -= q * vals[p];
        }
        if (!vals[b].is_zero()) next.push_back(b);
      }
      active = std::move(next);
    }
    const std::size_t p = active.front();
    if (d.is_zero()) {
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(p));
    } else {
      const Integer g = gcd(vals[p], d);
      basis[p] = (d / g) * basis[p];
    }
  }
  return Lattice::from_generators(n, basis);
}

// ---------------------------------------------------------------- Smith form

SmithForm smith_form(const Matrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  Matrix x(a);
  SmithForm s{Matrix::identity(m), Matrix::identity(n), Matrix::identity(n), Vec(std::min(m, n)), 0};
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(x(i, k), x(j, k));
    for (std::size_t k = 0; k < m; ++k) std::swap(s.u(i, k), s.u(j, k));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m; ++k) std::swap(x(k, i), x(k, j));
    for (std::size_t k = 0; k < n; ++k) std::swap(s.v(k, i), s.v(k, j));
    for (std::size_t k = 0; k < n; ++k) std::swap(s.v_inv(i, k), s.v_inv(j, k));
  };
  // row_i -= q row_t
  auto row_op = [&](std::size_t i, std::size_t t, const Integer& q) {
    for (std::size_t k = 0; k < n; ++k)
      if (!x(t, k).is_zero()) x(i, k) -= q * x(t, k);
    for (std::size_t k = 0; k < m; ++k)
      if (!s.u(t, k).is_zero()) s.u(i, k) -= q * s.u(t, k);
  };
  // col_j -= q col_t
  auto col_op = [&](std::size_t j, std::size_t t, const Integer& q) {
    for (std::size_t k = 0; k < m; ++k)
      if (!x(k, t).is_zero()) x(k, j) -= q * x(k, t);
    for (std::size_t k = 0; k < n; ++k)
      if (!s.v(k, t).is_zero()) s.v(k, j) -= q * s.v(k, t);
    for (std::size_t k = 0; k < n; ++k)
      if (!s.v_inv(j, k).is_zero()) s.v_inv(t, k) += q * s.v_inv(j, k);
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Pivot: smallest non-zero absolute value in the trailing block.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (!x(i, j).is_zero() && (!best || abs(x(i, j)) < abs(x(best->first, best->second)))) best = {i, j};
    if (!best) break;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (x(i, t).is_zero()) continue;
        row_op(i, t, x(i, t) / x(t, t));
        if (!x(i, t).is_zero()) {
          swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (x(t, j).is_zero()) continue;
        col_op(j, t, x(t, j) / x(t, t));
        if (!x(t, j).is_zero()) {
          swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: fold any offending row into the pivot row.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!(x(i, j) % x(t, t)).is_zero()) {
            row_op(t, i, Integer(-1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (x(t, t).sign() < 0) {
      for (std::size_t k = 0; k < n; ++k) x(t, k) = -x(t, k);
      for (std::size_t k = 0; k < m; ++k) s.u(t, k) = -s.u(t, k);
    }
    s.diagonal[t] = x(t, t);
  }
  s.rank = t;
  return s;
}

// ---------------------------------------------------------------- LinearSolver

LinearSolver::LinearSolver(const Matrix& a, const Vec& row_moduli)
    : equations_(a.rows()), unknowns_(a.cols()) {
  const std::size_t width = equations_ + unknowns_;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Vec v(width);
    for (std::size_t i = 0; i < equations_; ++i) v[i] = a(i, j);
    v[equations_ + j] = 1;
    echelon_insert(rows_, pivots_, std::move(v), equations_);
  }
  for (std::size_t i = 0; i < equations_; ++i) {
    if (row_moduli[i].is_zero()) continue;
    Vec v(width);
    v[i] = row_moduli[i];
    echelon_insert(rows_, pivots_, std::move(v), equations_);
  }
}

std::optional<Vec> LinearSolver::solve(const Vec& b) const {
  if (b.size() != equations_) throw std::invalid_argument("LinearSolver: rhs length mismatch");
  Vec r(b);
  Vec y(unknowns_);
  std::size_t from = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    for (std::size_t k = from; k < p; ++k)
      if (!r[k].is_zero()) return std::nullopt;
    const Integer& piv = rows_[i][p];
    if (!(r[p] % piv).is_zero()) return std::nullopt;
    const Integer c = r[p] / piv;
    if (!c.is_zero()) {
      for (std::size_t k = p; k < equations_; ++k)
        if (!rows_[i][k].is_zero()) r[k] -= c * rows_[i][k];
      for (std::size_t k = 0; k < unknowns_; ++k)
        if (!rows_[i][equations_ + k].is_zero()) y[k] += c * rows_[i][equations_ + k];
    }
    from = p + 1;
  }
  for (std::size_t k = from; k < equations_; ++k)
    if (!r[k].is_zero()) return std::nullopt;
  return y;
}

// ---------------------------------------------------------------- Subquotient

Subquotient::Subquotient(Lattice numerator, const std::vector<Vec>& denominator_gens)
    : numerator_(std::move(numerator)) {
  const std::size_t k = numerator_.rank();
  Lattice den(k);
  for (const auto& g : denominator_gens) {
    auto c = numerator_.coordinates(g);
    if (!c) throw std::invalid_argument("Subquotient: denominator is not contained in numerator");
    den.insert(std::move(*c));
  }
  den.reduce();

  std::vector<bool> is_unit_col(k, false);
  for (std::size_t i = 0; i < den.rank(); ++i)
    if (den.basis()[i][den.pivots()[i]].is_one()) is_unit_col[den.pivots()[i]] = true;
  for (std::size_t c = 0; c < k; ++c)
    if (!is_unit_col[c]) kept_cols_.push_back(c);

  std::vector<Vec> relations;
  for (std::size_t i = 0; i < den.rank(); ++i) {
    const Vec& row = den.basis()[i];
    Vec restricted(kept_cols_.size());
    for (std::size_t c = 0; c < kept_cols_.size(); ++c) restricted[c] = row[kept_cols_[c]];
    if (is_unit_col[den.pivots()[i]]) {
      unit_pivot_cols_.push_back(den.pivots()[i]);
      unit_rows_.push_back(std::move(restricted));
    } else {
      relations.push_back(std::move(restricted));
    }
  }

  const std::size_t kc = kept_cols_.size();
  Matrix rel(relations.size(), kc);
  for (std::size_t i = 0; i < relations.size(); ++i)
    for (std::size_t c = 0; c < kc; ++c) rel(i, c) = relations[i][c];
  const SmithForm sf = smith_form(rel);
  v_ = sf.v;
  for (std::size_t j = 0; j < kc; ++j) {
    const Integer order = j < sf.rank ? sf.diagonal[j] : Integer(0);
    if (order.is_one()) continue;
    factor_index_.push_back(j);
    orders_.push_back(order);
    // generator: row j of v^{-1}, embedded back into numerator coordinates
    Vec kcoords(k);
    for (std::size_t c = 0; c < kc; ++c) kcoords[kept_cols_[c]] = sf.v_inv(j, c);
    Vec amb(numerator_.ambient());
    for (std::size_t b = 0; b < k; ++b) axpy(amb, kcoords[b], numerator_.basis()[b]);
    generators_.push_back(std::move(amb));
  }
}

std::size_t Subquotient::free_rank() const {
  return static_cast<std::size_t>(std::count_if(orders_.begin(), orders_.end(), [](const Integer& o) { return o.is_zero(); }));
}

Vec Subquotient::invariant_factors() const {
  Vec out;
  for (const auto& o : orders_)
    if (!o.is_zero()) out.push_back(o);
  return out;
}

Integer Subquotient::order() const {
  Integer n = 1;
  for (const auto& o : orders_) {
    if (o.is_zero()) throw std::logic_error("order of an infinite group");
    n *= o;
  }
  return n;
}

std::optional<Vec> Subquotient::try_encode(const Vec& x) const {
  auto y = numerator_.coordinates(x);
  if (!y) return std::nullopt;
  const std::size_t kc = kept_cols_.size();
  Vec kept(kc);
  for (std::size_t c = 0; c < kc; ++c) kept[c] = (*y)[kept_cols_[c]];
  for (std::size_t i = 0; i < unit_pivot_cols_.size(); ++i) axpy(kept, -(*y)[unit_pivot_cols_[i]], unit_rows_[i]);
  Vec coords(factor_index_.size());
  for (std::size_t f = 0; f < factor_index_.size(); ++f) {
    const std::size_t j = factor_index_[f];
    Integer z;
    for (std::size_t c = 0; c < kc; ++c)
      if (!kept[c].is_zero() && !v_(c, j).is_zero()) z += kept[c] * v_(c, j);
    coords[f] = reduce_mod(z, orders_[f]);
  }
  return coords;
}

Vec Subquotient::encode(const Vec& x) const {
  auto c = try_encode(x);
  if (!c) throw std::invalid_argument("Subquotient::encode: vector is not in the numerator lattice");
  return *c;
}

Vec Subquotient::lift(const Vec& coords) const {
  if (coords.size() != generators_.size()) throw std::invalid_argument("Subquotient::lift: wrong coordinate count");
  Vec out(ambient());
  for (std::size_t f = 0; f < coords.size(); ++f) axpy(out, coords[f], generators_[f]);
  return out;
}

Vec Subquotient::reduce(const Vec& coords) const { return galstruct::reduce_mod(coords, orders_); }

}  // namespace galstruct
