#pragma once

// Exact integer linear algebra: dense matrices, echelon (Hermite) lattices,
// kernels modulo per-coordinate moduli, Smith forms and subquotients of Z^n.

#include "galstruct/integer.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace galstruct {

using Vec = std::vector<Integer>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Integer& s, const Vec& v);
// a += s * b
void axpy(Vec& a, const Integer& s, const Vec& b);
Integer dot(const Vec& a, const Vec& b);
// Coordinate-wise reduction; modulus 0 leaves the entry alone.
Vec reduce_mod(const Vec& v, const Vec& moduli);
std::string to_string(const Vec& v);

class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& columns);
  static Matrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  void set_column(std::size_t j, const Vec& v);

  Matrix transpose() const;
  bool is_zero() const;
  Integer trace() const;

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  friend Matrix operator*(const Integer& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  // Reduce row i modulo moduli[i] (0 = no reduction).
  Matrix reduce_rows(const Vec& moduli) const;

  static Matrix kron(const Matrix& a, const Matrix& b);
  static Matrix block_diag(const std::vector<Matrix>& blocks);
  static Matrix hstack(const std::vector<Matrix>& blocks);
  static Matrix vstack(const std::vector<Matrix>& blocks);
  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::string to_string(const Matrix& m);

// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const Matrix& m);

// A sublattice of Z^n kept in row-echelon (Hermite) form: every basis row has
// a positive pivot, pivots strictly increase, and after reduce() the entries
// above each pivot lie in [0, pivot).
class Lattice {
public:
  explicit Lattice(std::size_t ambient = 0) : ambient_(ambient) {}
  static Lattice from_generators(std::size_t ambient, const std::vector<Vec>& gens);
  static Lattice full(std::size_t ambient);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Vec>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // Returns true when v enlarged the lattice.
  bool insert(Vec v);
  void reduce();
  bool contains(const Vec& v) const;
  // Coefficients c with v = sum c_i basis_i, if v lies in the lattice.
  std::optional<Vec> coordinates(const Vec& v) const;
  bool contains_lattice(const Lattice& other) const;
  friend bool operator==(const Lattice& a, const Lattice& b);

private:
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// {x in Z^cols : (A x)_i == 0 mod moduli[i]}, moduli[i] == 0 meaning exact zero.
Lattice kernel_lattice(const Matrix& a, const Vec& row_moduli);
Lattice column_lattice(const Matrix& a);
// Lattice spanned by the diagonal relations moduli[i] * e_i.
std::vector<Vec> relation_vectors(const Vec& moduli);

struct SmithForm {
  Matrix u, v, v_inv;  // u * A * v = diag(d), with v_inv = v^{-1}
  Vec diagonal;        // length min(rows, cols); non-negative, divisibility chain
  std::size_t rank = 0;
};
SmithForm smith_form(const Matrix& a);

// Solver for A y == b modulo per-row moduli, with y an unconstrained integer
// vector. Built once per matrix; solve() is cheap.
class LinearSolver {
public:
  LinearSolver(const Matrix& a, const Vec& row_moduli);
  std::optional<Vec> solve(const Vec& b) const;
  std::size_t unknowns() const noexcept { return unknowns_; }

private:
  std::size_t equations_ = 0;
  std::size_t unknowns_ = 0;
  std::vector<Vec> rows_;  // [echelon part (equations_) | coefficients (unknowns_)]
  std::vector<std::size_t> pivots_;
};

// The finitely generated abelian group K / B for lattices B <= K <= Z^n,
// normalized to a direct sum of cyclic groups. Torsion factors come first in
// divisibility order, then free factors (order 0).
class Subquotient {
public:
  Subquotient() = default;
  Subquotient(Lattice numerator, const std::vector<Vec>& denominator_gens);

  std::size_t ambient() const noexcept { return numerator_.ambient(); }
  const Lattice& numerator() const noexcept { return numerator_; }
  const Vec& orders() const noexcept { return orders_; }
  std::size_t num_factors() const noexcept { return orders_.size(); }
  std::size_t free_rank() const;
  Vec invariant_factors() const;  // torsion orders only
  bool is_finite() const { return free_rank() == 0; }
  bool is_trivial() const { return orders_.empty(); }
  // Order of a finite subquotient; throws when infinite.
  Integer order() const;
  const std::vector<Vec>& generators() const noexcept { return generators_; }

  std::optional<Vec> try_encode(const Vec& x) const;
  Vec encode(const Vec& x) const;  // throws std::invalid_argument if x is not in K
  Vec lift(const Vec& coords) const;
  Vec reduce(const Vec& coords) const;

private:
  Lattice numerator_;
  std::vector<std::size_t> unit_pivot_cols_;   // columns of K-coordinates killed by unit pivots
  std::vector<Vec> unit_rows_;                 // matching rows, restricted to kept columns
  std::vector<std::size_t> kept_cols_;
  Matrix v_;                                   // Smith column transform on kept columns
  std::vector<std::size_t> factor_index_;      // Smith positions surviving (order != 1)
  Vec orders_;
  std::vector<Vec> generators_;
};

}  // namespace galstruct
