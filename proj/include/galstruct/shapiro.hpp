#pragma once

// Coinduced modules, Shapiro maps, the splitting lambda_p of
// H^2(G, Hom(ZS, V)) -> H^2(G, Hom(DeltaS, V)) for V coinduced from a point
// stabilizer, and the module of commuting triples between two short exact
// sequences.

#include "galstruct/checks.hpp"
#include "galstruct/cohomology.hpp"

namespace galstruct {

struct CoinducedModule {
  Subgroup h;
  GModule b;                    // over h.as_group()
  std::vector<int> transversal;  // left transversal of G/H, identity first
  // Hom_ZH(ZG, B) in coordinates phi(t^{-1}), t in the transversal: (g phi)(z) = phi(z g)
  GModule carrier;
  // Orbit product sum_t t.B_p with G permuting components (the induced module)
  GModule orbit_product;
  GMap identification;  // phi -> sum_t t.phi(t^{-1})
  GMap evaluation;      // restriction of carrier to H -> B, phi -> phi(1)
};

// transversal empty = H.left_transversal(). A given transversal must meet
// every coset once and start with the identity; throws Error("BadTransversal").
CoinducedModule coinduce(const Subgroup& h, const GModule& b, std::vector<int> transversal = {});

// Change of transversal: the identity map of Hom_ZH(ZG, B) written from the
// coordinates of `from` to those of `to` (same H and B).
GMap transversal_change(const CoinducedModule& from, const CoinducedModule& to);
// Same for the orbit products (t'.b' = t.(h b') when t' = t h).
GMap orbit_product_change(const CoinducedModule& from, const CoinducedModule& to);

// Restriction H^r(G, A) -> H^r(H, res A), r in {0 (Tate), 1, 2}.
AbelianHom restriction(const CohGroup& src, const CohGroup& dst, const Subgroup& h);

struct ShapiroMap {
  CohGroup source;  // H^r(G, Hom(D, coind B))
  CohGroup target;  // H^r(H, Hom(res D, B))
  AbelianHom map;
  bool orders_equal = false;
  bool bijective = false;
};
ShapiroMap shapiro(const GModule& d, const CoinducedModule& ci, int r);

struct ShapiroSplitting {
  CoinducedModule ci;
  int point = 0;
  GMap lambda;      // res ZS -> res DeltaS, d -> d - a'(d) p
  AbelianHom top;   // a^* over G
  AbelianHom bottom;  // a^* over G_p
  ShapiroMap sh_zs, sh_ds;
  AbelianHom lambda_star;
  AbelianHom s;     // sh_zs^{-1} lambda^* sh_ds
  CheckList checks;
};
// B is a module over the stabilizer of p; with_free_summand adds the module
// coinduced from the trivial subgroup (a cohomologically trivial component).
ShapiroSplitting shapiro_splitting(const GSet& s, int p, const GModule& b, bool with_free_summand = false);

struct ShortExact {
  GMap i, p;  // 0 -> A1 -> A2 -> A3 -> 0
};

struct ExactnessReport {
  bool injective = false, middle = false, surjective = false;
  bool exact() const { return injective && middle && surjective; }
};

struct HomOfPairs {
  Sub triples;        // inside Hom(A1,B1) + Hom(A2,B2) + Hom(A3,B3)
  GModule pairs;      // Hom(A1,B1) + Hom(A2,B2)
  GMap to_pairs;      // (f1, f2, f3) -> (f1, f2)
  GMap difference;    // (f1, f2) -> j f1 - f2 i
  CohGroup h2_triples, h2_pairs, h2_right;
  AbelianHom first, second;
  ExactnessReport h2_sequence;
  bool contains_identity = false;  // only meaningful when top == bottom
};
HomOfPairs hom_of_pairs(const ShortExact& top, const ShortExact& bottom);

}  // namespace galstruct
