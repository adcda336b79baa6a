#pragma once

// A small free ZG-resolution F3 -> F2 -> F1 -> F0 = ZG -> Z together with
// comparison maps to and from the unnormalized bar resolution.
//
// Elements of F_k = ZG^{r_k} are flat vectors indexed by j*|G| + g
// (coefficient of g.e_j). Elements of Bar_k are flat vectors indexed by
// x*|G|^k + (g1*|G| + g2 ...) meaning x[g1|...|gk].

#include "galstruct/linalg.hpp"

#include <cstddef>
#include <vector>

namespace galstruct {

class FiniteGroup;

struct Resolution {
  std::size_t n = 0;                    // |G|
  std::vector<std::size_t> ranks;       // r_0 .. r_3
  std::vector<int> generators;          // F1 basis e_j maps to g_j - 1
  std::vector<std::vector<Vec>> boundary;  // boundary[k][i] = d(e_i) in F_{k-1}, k = 1..3
  std::vector<Matrix> boundary_matrix;     // Z-matrix of d_k : F_k -> F_{k-1}
  std::vector<std::vector<Vec>> phi;    // phi[k][i] in Bar_k, k = 1..2
  std::vector<std::vector<Vec>> psi;    // psi[k][tuple] in F_k, k = 1..2

  // Left multiplication by g on an element of F_k.
  Vec translate(const FiniteGroup& g, int x, const Vec& v, std::size_t k) const;
};

Resolution build_resolution(const FiniteGroup& g, const std::vector<int>& generators);

// Checks d_{k-1} d_k = 0, exactness, and the chain-map identities of phi
// and psi; returns an empty string on success, else a description.
std::string verify_resolution(const FiniteGroup& g, const Resolution& r);

}  // namespace galstruct
