#pragma once

// Z-split extensions 0 -> X -> M -> Y -> 0, their classes in
// H^1(G, Hom(Y, X)), pushouts, splicing, and envelopes of a finite module.

#include "galstruct/cohomology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galstruct {

class ZSplitExt {
public:
  ZSplitExt() = default;
  // Validates exactness, equivariance of i and p, and that `section` is a
  // well-defined Z-linear map with p o section = id.
  ZSplitExt(GMap i, GMap p, Matrix section);
  // Finds a Z-section; throws Error("NotZSplit") if there is none.
  static ZSplitExt with_computed_section(GMap i, GMap p);

  const GMap& i() const { return i_; }
  const GMap& p() const { return p_; }
  const Matrix& section() const { return s_; }
  const GModule& X() const { return i_.source(); }
  const GModule& M() const { return i_.target(); }
  const GModule& Y() const { return p_.target(); }
  // Z-linear retraction r: M -> X with r o i = id and r o section = 0.
  Matrix retraction() const;
  // The unique x with i(x) = m, for m in the image of i.
  Vec pull_back(const Vec& m) const;

private:
  GMap i_, p_;
  Matrix s_;
};

// Inhomogeneous 1-cochain G -> Hom(Y, X): one Hom-coordinate vector per element.
using Cocycle1 = std::vector<Vec>;

// g -> g.s - s as Hom(Y, X) coordinates.
Cocycle1 section_cocycle(const ZSplitExt& e);
// Class of the extension in H^1(G, Hom(Y, X)); `h1` must be that group.
Vec extension_class(const ZSplitExt& e, const CohGroup& h1);
CohGroup extension_group(const GModule& y, const GModule& x);

// Throws Error("NotACocycle") naming a failing pair.
void check_cocycle(const GModule& x, const GModule& y, const Cocycle1& c);
// M = X + Y with g.(x, y) = (g x + c(g)(g y), g y), section y -> (0, y).
ZSplitExt module_from_cocycle(const GModule& x, const GModule& y, const Cocycle1& c);

// An equivariant Phi: M1 -> M2 with Phi i1 = i2 and p2 Phi = p1, if one exists.
std::optional<Matrix> find_equivalence(const ZSplitExt& e1, const ZSplitExt& e2);
// Re-checks a candidate equivalence.
bool verify_equivalence(const ZSplitExt& e1, const ZSplitExt& e2, const Matrix& phi);

// Pushout of 0 -> X -> M -> Y -> 0 along f: X -> X'.
struct Pushout {
  ZSplitExt ext;
  GMap from_middle;  // M -> pushout module
};
Pushout pushout(const ZSplitExt& e, const GMap& f);

// 0 -> A -> B -> D -> E -> 0 from 0 -> A -> B -> C -> 0 and 0 -> C -> D -> E -> 0.
std::vector<GMap> splice(const GMap& i1, const GMap& p1, const GMap& i2, const GMap& p2);

// Hom(T, -) and Hom(-, T) applied to a short exact sequence, as (left, right) maps.
std::pair<GMap, GMap> hom_covariant(const GModule& t, const GMap& i, const GMap& p);
std::pair<GMap, GMap> hom_contravariant(const GMap& i, const GMap& p, const GModule& t);

// ---------------------------------------------------------------- envelopes

struct Envelope {
  GModule mu, omega, omega_bar;
  GMap j, q;  // mu -> omega -> omega_bar
  std::size_t w = 0;
  std::string strategy;
  std::string base;  // catalog entry or "coprime"
  Vec class_coords;  // extension class used by the search strategy
  std::vector<std::string> tried;
};

struct CatalogLattice {
  std::string name;
  GModule lattice;
};
// Default search catalog for a scenario; entries whose rank cannot reach a
// multiple of |G| are still listed and rejected by the search.
std::vector<CatalogLattice> default_envelope_catalog(const GroupPtr& g, const GSet& s);
std::vector<CatalogLattice> select_catalog(const GroupPtr& g, const GSet& s, const std::vector<std::string>& names);

// strategy: "coprime" or "search". Throws Error("NoEnvelopeFound").
Envelope build_envelope(const GModule& mu, const std::string& strategy, std::size_t w,
                        const std::vector<CatalogLattice>& catalog);
// Empty string when every invariant holds, else the failing invariant.
std::string validate_envelope(const Envelope& e);

}  // namespace galstruct
