#pragma once

// ZG-modules as presentations: coordinates Z^n with a modulus per coordinate
// (0 = free, d >= 2 = cyclic of order d) and one action matrix per group
// element. Action matrices are kept reduced row-wise modulo the moduli.

#include "galstruct/group.hpp"
#include "galstruct/linalg.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace galstruct {

class GModule {
public:
  GModule() = default;
  // Validates the action laws exhaustively; throws Error("InvalidModule").
  GModule(GroupPtr group, Vec moduli, std::vector<Matrix> action);

  const GroupPtr& group() const { return d_->group; }
  std::size_t dim() const { return d_->moduli.size(); }
  const Vec& moduli() const { return d_->moduli; }
  const Matrix& action(int g) const { return d_->action[static_cast<std::size_t>(g)]; }
  const std::vector<Matrix>& actions() const { return d_->action; }

  std::size_t free_rank() const;
  std::vector<std::size_t> free_coords() const;
  std::vector<std::size_t> torsion_coords() const;
  bool is_lattice() const { return free_rank() == dim(); }
  bool is_finite() const { return free_rank() == 0; }
  // Invariant factors of the torsion subgroup (divisibility chain).
  Vec invariant_factors() const;
  Integer torsion_order() const;

  Vec reduce(const Vec& v) const { return reduce_mod(v, moduli()); }
  Vec act(int g, const Vec& v) const { return reduce(action(g) * v); }
  bool equal(const Vec& a, const Vec& b) const { return reduce(a) == reduce(b); }
  std::vector<Vec> relations() const { return relation_vectors(moduli()); }

  friend bool operator==(const GModule& a, const GModule& b);
  friend bool same_module(const GModule& a, const GModule& b);

private:
  struct Data {
    GroupPtr group;
    Vec moduli;
    std::vector<Matrix> action;
  };
  std::shared_ptr<const Data> d_;
};

// Structure description used in reports.
std::string describe(const GModule& m);

class GMap {
public:
  GMap() = default;
  // Checks well-definedness modulo relations; throws Error("IllFormedMap").
  GMap(GModule source, GModule target, Matrix matrix);

  const GModule& source() const { return source_; }
  const GModule& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }
  Vec operator()(const Vec& x) const { return target_.reduce(matrix_ * x); }
  bool is_equivariant() const;

private:
  GModule source_, target_;
  Matrix matrix_;
};

GMap identity_map(const GModule& m);
GMap zero_map(const GModule& s, const GModule& t);
GMap compose(const GMap& outer, const GMap& inner);  // outer o inner
GMap operator+(const GMap& a, const GMap& b);
GMap operator-(const GMap& a);
GMap operator-(const GMap& a, const GMap& b);

// ---------------------------------------------------------------- standard modules
GModule regular_module(const GroupPtr& g, std::size_t k = 1);  // ZG^k, index copy*|G| + g
GModule trivial_module(const GroupPtr& g);                     // Z
GModule permutation_module(const GSet& s);                     // ZS
GModule augmentation_ideal(const GroupPtr& g);                 // basis g - 1, g != 1
GModule delta_s(const GSet& s);                                // basis p - p0, p != p0
// Cyclic Z/m (m >= 2) or Z (m = 0) with g acting by units[g].
GModule cyclic_module(const GroupPtr& g, const Integer& m, const std::vector<Integer>& units);
GModule zero_module(const GroupPtr& g);
// Z-dual lattice: action by inverse transposes.
GModule dual_lattice(const GModule& m);

enum class StandardKind { Regular, Permutation, Trivial, Augmentation, DeltaS };
// Throws Error("MissingGSet") when S is needed and absent.
GModule standard_module(const GroupPtr& g, StandardKind kind, const GSet* s = nullptr, std::size_t k = 1);

GMap augmentation_map(const GroupPtr& g);           // ZG -> Z
GMap augmentation_inclusion(const GroupPtr& g);     // DeltaG -> ZG
GMap permutation_augmentation(const GSet& s);       // ZS -> Z
GMap delta_s_inclusion(const GSet& s);              // DeltaS -> ZS

// ---------------------------------------------------------------- tensor and Hom
// Tensor coordinates: pairs (i, j) in i-major order with modulus gcd(m_i, n_j);
// pairs of modulus 1 are dropped.
struct TensorLayout {
  std::vector<std::pair<std::size_t, std::size_t>> coords;
  std::vector<long> index;  // i * dimN + j -> coordinate, or -1
};
TensorLayout tensor_layout(const GModule& m, const GModule& n);
GModule tensor(const GModule& m, const GModule& n);
GMap tensor_map(const GMap& f, const GMap& g);
Vec tensor_element(const GModule& m, const GModule& n, const Vec& x, const Vec& y);

// Hom coordinates: entries (row j of N, column i of M) admitted by type, in
// j-major order; value c stands for the matrix entry c * unit.
struct HomEntry {
  std::size_t row, col;
  Integer unit, modulus;
};
std::vector<HomEntry> hom_layout(const GModule& m, const GModule& n);
GModule hom_module(const GModule& m, const GModule& n);
Matrix hom_to_matrix(const GModule& m, const GModule& n, const Vec& coords);
// Throws Error("IllFormedMap") if the matrix is not a homomorphism.
Vec hom_from_matrix(const GModule& m, const GModule& n, const Matrix& f);
// Hom(f, g): Hom(M, N) -> Hom(M', N'), F -> g o F o f for f: M' -> M, g: N -> N'.
GMap hom_map(const GMap& f, const GMap& g);
GMap hom_left(const GMap& f, const GModule& n);   // Hom(f, id_N)
GMap hom_right(const GModule& m, const GMap& g);  // Hom(id_M, g)

// ---------------------------------------------------------------- sums, kernels, cokernels
struct DirectSum {
  GModule module;
  std::vector<GMap> inclusions, projections;
};
DirectSum direct_sum(const GroupPtr& g, const std::vector<GModule>& parts);
GModule add_free(const GModule& m, std::size_t k);

struct Sub {
  GModule module;
  GMap inclusion;
};
struct Quot {
  GModule module;
  GMap projection;
  Matrix lifts;  // column k: a preimage of generator k in the parent
};
// The subquotient numerator/denominator lattices live in the coordinates of
// `parent`; the result carries the induced action.
Sub kernel(const GMap& f);
Sub image(const GMap& f);
Quot cokernel(const GMap& f);

struct KernelImageCokernel {
  Sub kernel;
  Sub image;
  Quot cokernel;
};
KernelImageCokernel map_kernel_image_cokernel(const GMap& f);

GModule restrict_module(const GModule& m, const Subgroup& h);
GMap restrict_map(const GMap& f, const Subgroup& h);

struct TorsionSplit {
  Sub torsion;
  Quot lattice;
};
TorsionSplit torsion_split(const GModule& m);

// Exactness of 0 -> M0 -> M1 -> ... -> Mk -> 0 for maps f_i: M_{i} -> M_{i+1}.
struct ExactVerdict {
  bool exact = true;
  std::string node;     // e.g. "M2" or "injective" / "surjective"
  std::string witness;  // an offending element
};
ExactVerdict check_exact(const std::vector<GMap>& seq);

// Equality of subgroups of M generated by given vectors (relations added).
bool same_subgroup(const GModule& m, const std::vector<Vec>& a, const std::vector<Vec>& b);
bool same_module(const GModule& a, const GModule& b);

}  // namespace galstruct
