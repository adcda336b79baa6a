#pragma once

// Tate cohomology in degrees -1..2, maps between finite abelian groups,
// Q/Z-valued characters and the trace pairing.
//
// Degrees 1 and 2 use cochains on the group's small free resolution:
// C^k(A) = A^{r_k}, a cochain being the values on the ZG-basis of F_k. The
// resolution's comparison maps translate to and from inhomogeneous
// (bar) cochains G^k -> A. Degrees 0 and -1 use elements of A directly.

#include "galstruct/gmodule.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galstruct {

class QmodZ {
public:
  QmodZ() = default;
  QmodZ(const Integer& num, const Integer& den);
  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  std::string str() const;  // "p/q"
  static QmodZ parse(const std::string& s);
  friend QmodZ operator+(const QmodZ& a, const QmodZ& b);
  friend QmodZ operator-(const QmodZ& a);
  friend QmodZ operator*(const Integer& k, const QmodZ& a);
  friend bool operator==(const QmodZ& a, const QmodZ& b) = default;
  friend auto operator<=>(const QmodZ& a, const QmodZ& b) = default;

private:
  Integer num_ = 0, den_ = 1;
};

// A homomorphism Z^k/(orders) -> Z^l/(orders) in coordinates (order 0 = Z).
class AbelianHom {
public:
  AbelianHom() = default;
  AbelianHom(Vec source_orders, Vec target_orders, Matrix m);
  const Vec& source_orders() const { return src_; }
  const Vec& target_orders() const { return dst_; }
  const Matrix& matrix() const { return m_; }
  Vec operator()(const Vec& x) const { return reduce_mod(m_ * x, dst_); }
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  bool is_zero() const;
  // Some x with f(x) = y.
  std::optional<Vec> preimage(const Vec& y) const;
  friend bool operator==(const AbelianHom& a, const AbelianHom& b);

private:
  Vec src_, dst_;
  Matrix m_;
};
AbelianHom compose(const AbelianHom& outer, const AbelianHom& inner);
AbelianHom identity_hom(const Vec& orders);
// Inverse of a bijection; throws Error("NotAnIsomorphism").
AbelianHom inverse(const AbelianHom& f);

// All elements of a finite group Z/o1 x ... x Z/ok in lexicographic order.
std::vector<Vec> enumerate_elements(const Vec& orders);

class CohGroup {
public:
  CohGroup() = default;
  CohGroup(const GModule& a, int degree);

  int degree() const { return degree_; }
  const GModule& coefficients() const { return a_; }
  const Vec& orders() const { return q_.orders(); }
  std::size_t num_factors() const { return q_.num_factors(); }
  bool is_trivial() const { return q_.is_trivial(); }
  Integer order() const { return q_.order(); }
  // Length of a cochain vector (dim A for degrees -1, 0).
  std::size_t cochain_dim() const { return moduli_.size(); }
  const Vec& cochain_moduli() const { return moduli_; }

  bool is_cocycle(const Vec& c) const;
  bool is_coboundary(const Vec& c) const;
  std::optional<Vec> try_encode(const Vec& cocycle) const;
  Vec encode(const Vec& cocycle) const;  // throws Error("NotACocycle")
  Vec lift(const Vec& coords) const;     // a representative cocycle
  std::vector<Vec> basis_cocycles() const;

  // Translation between resolution cochains and inhomogeneous cochains
  // (one value in A per tuple in G^degree), degrees 1 and 2 only.
  Vec from_bar(const std::vector<Vec>& values) const;
  std::vector<Vec> to_bar(const Vec& cochain) const;

private:
  GModule a_;
  int degree_ = 0;
  Vec moduli_;
  Subquotient q_;
};

// Coboundary delta^k : C^k(A) -> C^{k+1}(A), k = 0, 1, 2.
Matrix coboundary_matrix(const GModule& a, int k);
// Cochain-level action of a module map on C^k (k = -1, 0 meaning plain elements).
Vec apply_on_cochain(const GMap& f, int k, const Vec& cochain);
// f_* : H^r(source) -> H^r(target) in class coordinates.
AbelianHom induced(const GMap& f, const CohGroup& src, const CohGroup& dst);

// Connecting map for 0 -> A -(i)-> B -(p)-> C -> 0, from H^r(C) to H^{r+1}(A),
// r in {0, 1} (degree 0 meaning Tate H^0). Lift along p on integer
// coordinates, apply delta, pull back along i. Throws Error("HomNotExact")
// when a lift does not exist.
AbelianHom connecting(const GMap& i, const GMap& p, const CohGroup& src, const CohGroup& dst);

struct TrivialityVerdict {
  bool trivial = true;
  std::vector<int> subgroup;  // first failing subgroup (members)
  int degree = 0;
  Vec orders;
};
TrivialityVerdict is_cohomologically_trivial(const GModule& m);

// ---------------------------------------------------------------- characters
// A character of Z/o1 x ... x Z/ok is given by its values on the basis.
struct Character {
  std::vector<QmodZ> values;
  QmodZ operator()(const Vec& x) const;
  friend bool operator==(const Character& a, const Character& b) = default;
  friend auto operator<=>(const Character& a, const Character& b) = default;
};
// All characters of a finite group, in lexicographic order of a/o_i numerators.
std::vector<Character> character_group(const Vec& orders);
// Throws Error("InfiniteGroup") when an order is 0.
void require_finite(const Vec& orders);
Character dualize(const AbelianHom& f, const Character& chi);  // chi o f
Character scale(const Integer& k, const Character& chi);
std::string to_string(const Character& chi);

// (1/|G|) trace(f) mod Z
QmodZ trace_character(const Matrix& f, std::size_t group_order);

}  // namespace galstruct
