#pragma once

// Relation modules of generating sets, the maps beta: R_d -> DeltaG (x) DeltaG
// and beta' = beta (x) DeltaS into L2, the module M' with its comparison to M,
// and Schanuel stability of relation modules.

#include "galstruct/construction.hpp"
#include "galstruct/isotest.hpp"

namespace galstruct {

struct RelationData {
  std::vector<int> generators;
  GModule free;   // ZG^d, basis e_i <-> 1 (x)_F (x_i - 1)
  GMap rel_map;   // e_i -> g_i - 1 in DeltaG
  Sub r;          // R_d
};
// Throws Error("NotGenerating").
RelationData relation_module(const GroupPtr& g, const std::vector<int>& gens);

// gens followed by the remaining non-identity elements in index order.
std::vector<int> full_enumeration(const GroupPtr& g, const std::vector<int>& gens);

struct BetaData {
  RelationData rel;
  std::size_t m = 0;          // |G| - 1 - d
  GModule delta_g2;           // DeltaG (x) DeltaG
  GMap beta;                  // R_d -> DeltaG (x) DeltaG
  GMap to_free;               // DeltaG (x) DeltaG -> ZG^m
  CheckList checks;
};
// Throws Error("CokernelNotFree") if 0 -> R_d -> DeltaG (x) DeltaG -> ZG^m -> 0 fails.
BetaData beta(const GroupPtr& g, const std::vector<int>& gens);

struct BetaPrimeData {
  BetaData b;
  GModule source;   // R_d (x) DeltaS
  GModule l2;       // DeltaG (x) (DeltaG (x) DeltaS)
  GMap beta_prime;  // source -> L2
  GMap to_free;     // L2 -> ZG^m (x) DeltaS
  GMap free_iso;    // ZG^{m(|S|-1)} -> ZG^m (x) DeltaS
  std::size_t cokernel_rank = 0;  // m(|S| - 1)
  CheckList checks;
};
// Throws Error("CokernelNotFree").
BetaPrimeData beta_prime(const GroupPtr& g, const std::vector<int>& gens, const GSet& s);

long long compute_n_prime(std::size_t d, std::size_t s_size, std::size_t w);

struct MPrimeResult {
  BetaPrimeData bp;
  AbelianHom beta_prime_star;  // H^1(Hom(w, R (x) DeltaS)) -> H^1(Hom(w, L2))
  Vec class_coords;            // preimage of eps^(1)
  ZSplitExt ext;               // 0 -> R (x) DeltaS -> M' -> w -> 0
  Matrix to_m;                 // M' -> M (pushout composed with the equivalence)
  long long n = 0, n_prime = 0;
  CheckList checks;
};
// Uses a minimal generating set. Throws Error("NotAnIsomorphism") if beta'_*
// is not bijective.
MPrimeResult build_M_prime(const Scenario& sc, const TransportMaps& tm, const EpsilonTransport& t,
                           const BigDiagram& d);

struct SchanuelVerdict {
  std::size_t d_a = 0, d_b = 0;
  std::string difference;  // fingerprint difference, "" when equal
  IsoVerdict iso;          // explicit search on the padded pair
  bool fingerprints_equal() const { return difference.empty(); }
};
// R_{d_a} + ZG^{d_b - d_a} versus R_{d_b}, with d_a <= d_b after swapping.
SchanuelVerdict schanuel_check(const GroupPtr& g, const std::vector<int>& gens_a, const std::vector<int>& gens_b,
                               const IsoEffort& effort = {});

}  // namespace galstruct
