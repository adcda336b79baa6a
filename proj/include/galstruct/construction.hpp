#pragma once

// The pipeline eps -> eps1 -> eps0 -> [h] -> -delta0[h], the module
// M = ker(eta) with its diagram, the two explicit cocycles of the extension
// class, and linkage characters of envelopes.

#include "galstruct/checks.hpp"
#include "galstruct/extensions.hpp"

#include <cstdint>
#include <optional>

namespace galstruct {

struct Scenario {
  GroupPtr group;
  GSet s;
  GModule mu;
  Envelope envelope;

  GModule delta_g, delta_s, l1, l2, zg_ds, zg_l1;
  GMap l1_incl;     // L1 -> ZG (x) DeltaS
  GMap zg_ds_proj;  // ZG (x) DeltaS -> DeltaS
  GMap l2_incl;     // L2 -> ZG (x) L1
  GMap p1;          // ZG (x) L1 -> L1
  Matrix one_tensor;  // Z-linear l -> 1 (x) l, L1 -> ZG (x) L1
};

// Throws Error("InvalidScenario") unless G != 1 and mu is cyclic of order >= 2.
Scenario make_scenario(GroupPtr g, GSet s, GModule mu, Envelope env);

struct EpsilonSpace {
  CohGroup h2;  // H^2(G, Hom(DeltaS, mu))
  std::vector<Character> characters;
};
EpsilonSpace epsilon_space(const Scenario& sc);

// Everything in the composite that does not depend on eps.
struct TransportMaps {
  CohGroup h2_ds_mu, h1_l1_mu, h0_l1_wbar, h0_w_l1, h0_wbar_l1, h1_w_l2;
  AbelianHom d1;        // H^1(Hom(L1, mu)) -> H^2(Hom(DeltaS, mu))
  AbelianHom d0_prime;  // H^0(Hom(L1, wbar)) -> H^1(Hom(L1, mu))
  AbelianHom delta0;    // H^0(Hom(w, L1)) -> H^1(Hom(w, L2))
  AbelianHom wbar_to_w;  // H^0(Hom(wbar, L1)) -> H^0(Hom(w, L1)) from q
  Matrix wbar_lift;      // Z-linear section of q: wbar -> w
  std::vector<Vec> h_classes;               // all of H^0(Hom(w, L1))
  std::vector<Character> trace_duals;       // [h]* for each class above
  CheckList checks;                         // bijectivity of each step
};
TransportMaps prepare_transport(const Scenario& sc);

// [h]* : g -> (1/|G|) trace(hbar o g) on H^0(Hom(L1, wbar)).
Character trace_dual(const Scenario& sc, const TransportMaps& tm, const Matrix& h_rep);

struct EpsilonTransport {
  Character eps, eps1, eps0;
  Vec h_class;
  Matrix h_rep;  // omega -> L1
  Vec eps_super1;
};
// Throws Error("TransportFailed") if eps0 is not a trace dual.
EpsilonTransport transport(const Scenario& sc, const TransportMaps& tm, const Character& eps);

struct BigDiagram {
  DirectSum c;     // (ZG (x) L1) + omega
  GMap eta;        // C -> L1
  Sub m;           // M = ker(eta) -> C
  ZSplitExt top;   // 0 -> L2 -> M -> omega -> 0, section y -> (-1 (x) h(y), y)
  ZSplitExt column;  // 0 -> M -> C -> L1 -> 0
  GMap j_prime;    // mu -> M
  CheckList checks;
};
// Throws Error("DiagramFailure") naming the failing row, column or square.
BigDiagram build_M(const Scenario& sc, const EpsilonTransport& t);

struct ExplicitCocycles {
  Cocycle1 c_delta;  // g -> (1 (x) h) - g(1 (x) h)
  Cocycle1 c_ext;    // g -> g s - s
  bool pointwise_equal = false;
  bool same_class = false;
  bool class_is_eps_super1 = false;
  bool coboundary_shift_same_class = false;
};
ExplicitCocycles explicit_cocycles(const Scenario& sc, const TransportMaps& tm, const EpsilonTransport& t,
                                   const BigDiagram& d, std::uint64_t seed);

struct LinkageResult {
  bool middle_trivial = false;
  AbelianHom d_c;  // [L1, L1] -> H^1(Hom(L1, M))
  Character chi;   // tau1 d_c^{-1} j_*
  std::vector<Character> orbit;
};
// Throws Error("NotAnIsomorphism") if d_c is not invertible.
LinkageResult linkage(const ZSplitExt& env_c, const GMap& j, const GModule& mu);
// u . chi for every unit u of Z/|mu|, sorted and deduplicated.
std::vector<Character> unit_orbit(const Character& chi, const Integer& order);

long long compute_n(std::size_t group_order, std::size_t s_size, std::size_t w);

struct TheoremOutcome {
  EpsilonTransport transport;
  BigDiagram diagram;
  std::optional<LinkageResult> linkage;
  CheckList checks;
};
struct TheoremReport {
  std::vector<TheoremOutcome> per_eps;
  CheckList checks;  // aggregated, including injectivity across eps
};
// eps_indices empty = every character.
TheoremReport theorem_check(const Scenario& sc, const TransportMaps& tm, const EpsilonSpace& es,
                            const std::vector<std::size_t>& eps_indices, std::uint64_t seed,
                            bool with_linkage = true);

}  // namespace galstruct
