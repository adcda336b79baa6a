#pragma once

// Test-only oracle: cohomology from dense inhomogeneous (bar) cochains and
// brute-force enumeration, independent of the resolution-based engine.

#include "galstruct/cohomology.hpp"

#include <functional>

namespace oracle {

using namespace galstruct;

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// delta^k on inhomogeneous cochains, k >= 0.
inline Matrix bar_delta(const GModule& a, std::size_t k) {
  const auto& g = *a.group();
  const std::size_t n = g.order(), d = a.dim();
  const std::size_t src = ipow(n, k), dst = ipow(n, k + 1);
  Matrix m(dst * d, src * d);
  std::vector<int> t(k + 1);
  for (std::size_t T = 0; T < dst; ++T) {
    std::size_t rem = T;
    for (std::size_t i = k + 1; i-- > 0;) {
      t[i] = static_cast<int>(rem % n);
      rem /= n;
    }
    auto flat = [&](const std::vector<int>& s) {
      std::size_t x = 0;
      for (int e : s) x = x * n + static_cast<std::size_t>(e);
      return x;
    };
    auto add_block = [&](std::size_t col, const Matrix& r, int sign) {
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) m(T * d + x, col * d + y) += sign * r(x, y);
    };
    add_block(flat({t.begin() + 1, t.end()}), a.action(t[0]), 1);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<int> s;
      for (std::size_t j = 0; j <= k; ++j) {
        if (j == i) {
          s.push_back(g.mul(t[i], t[i + 1]));
          ++j;
        } else {
          s.push_back(t[j]);
        }
      }
      add_block(flat(s), Matrix::identity(d), (i % 2 == 0) ? -1 : 1);
    }
    add_block(flat({t.begin(), t.end() - 1}), Matrix::identity(d), (k % 2 == 0) ? -1 : 1);
  }
  Vec mod;
  for (std::size_t T = 0; T < dst; ++T) mod.insert(mod.end(), a.moduli().begin(), a.moduli().end());
  return m.reduce_rows(mod);
}

// Orders of H^k(G, A), k >= 1, from bar cochains.
inline Vec bar_cohomology(const GModule& a, std::size_t k) {
  const std::size_t n = a.group()->order();
  Vec mod_k, mod_k1;
  for (std::size_t T = 0; T < ipow(n, k); ++T) mod_k.insert(mod_k.end(), a.moduli().begin(), a.moduli().end());
  for (std::size_t T = 0; T < ipow(n, k + 1); ++T) mod_k1.insert(mod_k1.end(), a.moduli().begin(), a.moduli().end());
  const Matrix dk = bar_delta(a, k), dk1 = bar_delta(a, k - 1);
  std::vector<Vec> den;
  for (std::size_t j = 0; j < dk1.cols(); ++j) den.push_back(dk1.column(j));
  for (auto& r : relation_vectors(mod_k)) den.push_back(r);
  return Subquotient(kernel_lattice(dk, mod_k1), den).orders();
}

// Number of classes of H^1(G, A) for finite A by enumerating every function G -> A.
inline std::size_t enumerate_h1(const GModule& a) {
  require_finite(a.moduli());
  const auto& g = *a.group();
  const auto elems = enumerate_elements(a.moduli());
  const std::size_t n = g.order();
  std::size_t cocycles = 0;
  std::vector<std::size_t> pick(n, 0);
  auto index_of = [&](const Vec& v) {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == a.reduce(v)) return i;
    return elems.size();
  };
  while (true) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) {
        const Vec lhs = elems[pick[static_cast<std::size_t>(g.mul(int(x), int(y)))]];
        const Vec rhs = a.act(int(x), elems[pick[y]]) + elems[pick[x]];
        ok = a.equal(lhs, rhs);
      }
    cocycles += ok;
    std::size_t i = 0;
    while (i < n && ++pick[i] == elems.size()) pick[i++] = 0;
    if (i == n) break;
  }
  std::vector<std::vector<std::size_t>> cob;
  for (const auto& b : elems) {
    std::vector<std::size_t> c;
    for (std::size_t x = 0; x < n; ++x) c.push_back(index_of(a.act(int(x), b) - b));
    if (std::find(cob.begin(), cob.end(), c) == cob.end()) cob.push_back(c);
  }
  return cocycles / cob.size();
}

// Tate H^0 order for finite A, by enumeration of fixed points and norms.
inline std::size_t enumerate_h0(const GModule& a) {
  const auto elems = enumerate_elements(a.moduli());
  const std::size_t n = a.group()->order();
  std::size_t fixed = 0;
  std::vector<Vec> norms;
  for (const auto& x : elems) {
    bool f = true;
    for (std::size_t g = 0; g < n && f; ++g) f = a.equal(a.act(int(g), x), x);
    fixed += f;
    Vec s(a.dim());
    for (std::size_t g = 0; g < n; ++g) s = s + a.act(int(g), x);
    s = a.reduce(s);
    if (std::find(norms.begin(), norms.end(), s) == norms.end()) norms.push_back(s);
  }
  return fixed / norms.size();
}

inline Integer product(const Vec& orders) {
  Integer p = 1;
  for (const auto& o : orders) p *= o;
  return p;
}

}  // namespace oracle
