#pragma once

// Isomorphism invariants of G-modules, a bounded search for explicit
// equivariant isomorphisms, and stable-isomorphism verdicts.

#include "galstruct/gmodule.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galstruct {

struct SubgroupInvariants {
  std::vector<int> members;
  std::vector<Vec> tate;  // invariant factors of H^r(H, M), r = -1, 0, 1, 2 (0 = Tate)
  std::size_t fixed_rank = 0;
  friend bool operator==(const SubgroupInvariants&, const SubgroupInvariants&) = default;
};

struct Fingerprint {
  std::size_t free_rank = 0;
  Vec invariant_factors;
  std::vector<SubgroupInvariants> subgroups;  // all subgroups, fixed order
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const GModule& m);
// First difference between two fingerprints, or "" when equal.
std::string fingerprint_difference(const Fingerprint& a, const Fingerprint& b);

// Z-basis of Hom_G(M, N) as matrices (coordinates of N by coordinates of M).
std::vector<Matrix> equivariant_hom_basis(const GModule& m, const GModule& n);

// Equivariant, and bijective on underlying abelian groups.
bool is_isomorphism(const GModule& m, const GModule& n, const Matrix& f);

struct IsoEffort {
  int coefficient_bound = 2;
  std::size_t max_rank = 30;
  std::size_t max_candidates = 20000;
};

enum class IsoOutcome { Iso, NonIso, Unknown };
std::string to_string(IsoOutcome o);

struct IsoVerdict {
  IsoOutcome outcome = IsoOutcome::Unknown;
  std::optional<Matrix> certificate;  // when Iso, already verified
  std::string witness;                // when NonIso, the fingerprint difference
  std::size_t candidates_tried = 0;
};

// Candidates: the identity (when it is a G-map), then basis combinations by
// support size and coefficient size, in a fixed order; first hit wins.
IsoVerdict iso_search(const GModule& m, const GModule& n, const IsoEffort& effort = {});

// M + ZG^a versus N + ZG^b.
IsoVerdict stable_iso_check(const GModule& m, const GModule& n, std::size_t a, std::size_t b,
                            const IsoEffort& effort = {});

}  // namespace galstruct
