#pragma once

#include "galstruct/gmodule.hpp"
#include "galstruct/construction.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace testing_helpers {

using namespace galstruct;

inline GModule sign_module(const GroupPtr& g, const Integer& m, const std::vector<int>& negative) {
  std::vector<Integer> u(g->order(), Integer(1));
  for (int x : negative) u[std::size_t(x)] = -1;
  return cyclic_module(g, m, u);
}

// C2 acting on {p0, p1, p2} by fixing p0 and swapping p1, p2.
inline GSet c2_three_points(const GroupPtr& g) { return GSet(g, {{0, 1, 2}, {0, 2, 1}}); }

// Natural permutation action of a group given as permutations of {0..k-1}.
inline GSet natural_action(const GroupPtr& g, const std::vector<std::vector<int>>& perms) { return GSet(g, perms); }

// Exhaustive check of the module axioms (used where constructors only check generators).
inline bool action_is_valid(const GModule& m) {
  const auto& g = *m.group();
  const Vec& mod = m.moduli();
  for (std::size_t c = 0; c < m.dim(); ++c) {
    if (mod[c].is_zero()) continue;
    for (std::size_t x = 0; x < g.order(); ++x)
      if (!is_zero(m.act(int(x), mod[c] * unit_vec(m.dim(), c)))) return false;
  }
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      const Matrix lhs = (m.action(int(a)) * m.action(int(b))).reduce_rows(mod);
      const Matrix rhs = m.action(g.mul(int(a), int(b))).reduce_rows(mod);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

}  // namespace testing_helpers

namespace testing_helpers {

inline const std::vector<std::vector<int>>& s3_perms() {
  static const std::vector<std::vector<int>> p{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  return p;
}

}  // namespace testing_helpers


namespace testing_helpers {

inline int perm_sign(const std::vector<int>& p) {
  int s = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s ^= 1;
  return s;
}

// Small test scenarios by name: A, B, C3, C3t, V, S3c, S3b.
inline Scenario named_scenario(const std::string& which, std::size_t w = 1) {
  GroupPtr g;
  std::vector<std::vector<int>> act;
  GModule mu;
  std::string strat = "search";
  if (which == "A" || which == "B") {
    g = catalog_group("C2");
    if (which == "A") {
      act = {{0, 1, 2}, {0, 2, 1}};
      mu = sign_module(g, 3, {1});
      strat = "coprime";
    } else {
      act = {{0, 1, 2}, {0, 1, 2}};
      mu = sign_module(g, 4, {1});
    }
  } else if (which == "C3") {
    g = catalog_group("C3");
    act = {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    mu = cyclic_module(g, 3, {1, 1, 1});
  } else if (which == "C3t") {
    g = catalog_group("C3");
    act = {{0, 1}, {0, 1}, {0, 1}};
    mu = cyclic_module(g, 3, {1, 1, 1});
  } else if (which == "V") {
    g = catalog_group("C2xC2");
    act = {{0, 1, 2}, {0, 2, 1}, {0, 1, 2}, {0, 2, 1}};
    mu = sign_module(g, 3, {1, 3});
    strat = "coprime";
  } else if (which == "S3c") {
    g = catalog_group("S3");
    act.assign(6, {0, 1});
    mu = cyclic_module(g, 2, std::vector<Integer>(6, Integer(1)));
    strat = "presentation";
  } else if (which == "S3b") {
    g = catalog_group("S3");
    std::vector<Integer> u;
    for (const auto& p : s3_perms()) {
      int sg = perm_sign(p);
      act.push_back({sg, 1 - sg});
      u.push_back(sg ? -1 : 1);
    }
    mu = cyclic_module(g, 3, u);
    strat = "presentation";
  } else {
    throw std::invalid_argument("unknown test scenario " + which);
  }
  GSet s(g, act);
  Envelope env = build_envelope(mu, strat, w, default_envelope_catalog(g, s));
  return make_scenario(g, s, mu, env);
}

struct ShapiroCase {
  std::string label;
  GSet s;
  int p;
  GModule b;
};

// (S, p, B) pairs; B is a module over the stabilizer of p.
inline std::vector<ShapiroCase> shapiro_matrix() {
  std::vector<ShapiroCase> out;
  auto c2 = catalog_group("C2");
  GSet triv(c2, {{0, 1, 2}, {0, 1, 2}});
  out.push_back({"C2 trivial S, Z/4-", triv, 0, sign_module(triv.stabilizer(0).as_group(), 4, {1})});
  GSet a = c2_three_points(c2);
  out.push_back({"C2 free orbit, Z/4", a, 1, cyclic_module(a.stabilizer(1).as_group(), 4, {1})});
  out.push_back({"C2 fixed point, Z/2", a, 0, cyclic_module(a.stabilizer(0).as_group(), 2, {1, 1})});
  auto c3 = catalog_group("C3");
  GSet s3c(c3, {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}});
  out.push_back({"C3 fixed point, Z/9", s3c, 0, cyclic_module(s3c.stabilizer(0).as_group(), 9, {1, 1, 1})});
  out.push_back({"C3 free orbit, Z/3", s3c, 2, cyclic_module(s3c.stabilizer(2).as_group(), 3, {1})});
  auto s3 = catalog_group("S3");
  GSet nat(s3, s3_perms());
  Subgroup st = nat.stabilizer(0);
  std::vector<Integer> u;
  for (int x : st.members()) u.push_back(perm_sign(s3_perms()[std::size_t(x)]) ? -1 : 1);
  out.push_back({"S3 natural, Z/4 sign", nat, 0, cyclic_module(st.as_group(), 4, u)});
  out.push_back({"S3 natural, Z/2", nat, 1, cyclic_module(nat.stabilizer(1).as_group(), 2, {1, 1})});
  auto v = catalog_group("C2xC2");
  GSet vs(v, {{0, 1, 2}, {0, 2, 1}, {0, 1, 2}, {0, 2, 1}});
  out.push_back({"C2xC2, Z/2", vs, 0, cyclic_module(vs.stabilizer(0).as_group(), 2, std::vector<Integer>(4, 1))});
  Subgroup st1 = vs.stabilizer(1);
  out.push_back({"C2xC2 orbit point, Z/4-", vs, 1, sign_module(st1.as_group(), 4, {1})});
  return out;
}


}  // namespace testing_helpers
