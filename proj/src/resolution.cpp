#include "galstruct/resolution.hpp"

#include "galstruct/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace galstruct {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// g.(x[t]) = (gx)[t] on Bar_k.
Vec bar_translate(const FiniteGroup& g, int x, const Vec& v, std::size_t k) {
  const std::size_t n = g.order(), block = ipow(n, k);
  Vec out(v.size());
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t t = 0; t < block; ++t) {
      const Integer& c = v[y * block + t];
      if (!c.is_zero()) out[static_cast<std::size_t>(g.mul(x, static_cast<int>(y))) * block + t] += c;
    }
  return out;
}

// Contracting homotopy x[t] -> [x|t]: identical flat index, zero-padded.
Vec bar_contract(const Vec& v, std::size_t n) {
  Vec out(v.size() * n);
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

// Boundary of the basis element 1[t] for t in G^k, as an element of Bar_{k-1}.
Vec bar_boundary(const FiniteGroup& g, std::size_t k, std::size_t tuple) {
  const std::size_t n = g.order();
  std::vector<int> t(k);
  for (std::size_t i = k; i-- > 0;) {
    t[i] = static_cast<int>(tuple % n);
    tuple /= n;
  }
  const std::size_t block = ipow(n, k - 1);
  Vec out(n * block);
  auto flat = [&](const std::vector<int>& s) {
    std::size_t idx = 0;
    for (int e : s) idx = idx * n + static_cast<std::size_t>(e);
    return idx;
  };
  // g1[g2|...|gk]
  out[static_cast<std::size_t>(t[0]) * block + flat({t.begin() + 1, t.end()})] += 1;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    std::vector<int> s;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) {
        s.push_back(g.mul(t[i], t[i + 1]));
        ++j;
      } else {
        s.push_back(t[j]);
      }
    }
    out[flat(s)] += (i % 2 == 0) ? -1 : 1;
  }
  out[flat({t.begin(), t.end() - 1})] += (k % 2 == 0) ? 1 : -1;
  return out;
}

Matrix boundary_to_matrix(const FiniteGroup& g, const Resolution& r, std::size_t k) {
  const std::size_t n = g.order();
  Matrix m(r.ranks[k - 1] * n, r.ranks[k] * n);
  for (std::size_t i = 0; i < r.ranks[k]; ++i)
    for (std::size_t x = 0; x < n; ++x) m.set_column(i * n + x, r.translate(g, static_cast<int>(x), r.boundary[k][i], k - 1));
  return m;
}

// ZG-generators of a ZG-stable lattice, chosen greedily from its echelon basis.
std::vector<Vec> module_generators(const FiniteGroup& g, const Resolution& r, const Lattice& k, std::size_t degree) {
  std::vector<Vec> cands = k.basis();
  std::stable_sort(cands.begin(), cands.end(), [](const Vec& a, const Vec& b) {
    auto nz = [](const Vec& v) { return std::count_if(v.begin(), v.end(), [](const Integer& x) { return !x.is_zero(); }); };
    return nz(a) < nz(b);
  });
  Lattice span(k.ambient());
  std::vector<Vec> gens;
  for (const auto& v : cands) {
    if (span.contains(v)) continue;
    gens.push_back(v);
    for (std::size_t x = 0; x < g.order(); ++x) span.insert(r.translate(g, static_cast<int>(x), v, degree));
    if (span.rank() == k.rank() && span.contains_lattice(k)) break;
  }
  return gens;
}

// F-element -> Bar element, ZG-linearly through the images of the basis.
Vec apply_phi(const FiniteGroup& g, const Resolution& r, std::size_t k, const Vec& v) {
  const std::size_t n = g.order();
  Vec out(ipow(n, k + 1));
  for (std::size_t i = 0; i < r.ranks[k]; ++i)
    for (std::size_t x = 0; x < n; ++x) {
      const Integer& c = v[i * n + x];
      if (c.is_zero()) continue;
      const Vec base = k == 0 ? unit_vec(n, 0) : r.phi[k][i];
      axpy(out, c, bar_translate(g, static_cast<int>(x), base, k));
    }
  return out;
}

// Bar element -> F element, ZG-linearly through psi on the basis [t].
Vec apply_psi(const FiniteGroup& g, const Resolution& r, std::size_t k, const Vec& v) {
  const std::size_t n = g.order(), block = ipow(n, k);
  Vec out(r.ranks[k] * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t t = 0; t < block; ++t) {
      const Integer& c = v[x * block + t];
      if (c.is_zero()) continue;
      const Vec base = k == 0 ? unit_vec(n, 0) : r.psi[k][t];
      axpy(out, c, r.translate(g, static_cast<int>(x), base, k));
    }
  return out;
}

}  // namespace

Vec Resolution::translate(const FiniteGroup& g, int x, const Vec& v, std::size_t k) const {
  Vec out(v.size());
  for (std::size_t j = 0; j < ranks[k]; ++j)
    for (std::size_t y = 0; y < n; ++y) {
      const Integer& c = v[j * n + y];
      if (!c.is_zero()) out[j * n + static_cast<std::size_t>(g.mul(x, static_cast<int>(y)))] += c;
    }
  return out;
}

Resolution build_resolution(const FiniteGroup& g, const std::vector<int>& generators) {
  Resolution r;
  r.n = g.order();
  const std::size_t n = r.n;
  r.generators = generators;
  r.ranks = {1, generators.size(), 0, 0};
  r.boundary.resize(4);
  r.boundary_matrix.resize(4);
  for (int gj : generators) {
    Vec v(n);
    v[static_cast<std::size_t>(gj)] += 1;
    v[0] -= 1;
    r.boundary[1].push_back(v);
  }
  r.boundary_matrix[1] = boundary_to_matrix(g, r, 1);
  for (std::size_t k = 2; k <= 3; ++k) {
    const Matrix& prev = r.boundary_matrix[k - 1];
    const Lattice ker = kernel_lattice(prev, Vec(prev.rows()));
    r.boundary[k] = module_generators(g, r, ker, k - 1);
    r.ranks[k] = r.boundary[k].size();
    r.boundary_matrix[k] = boundary_to_matrix(g, r, k);
  }

  r.phi.resize(3);
  for (std::size_t k = 1; k <= 2; ++k)
    for (std::size_t i = 0; i < r.ranks[k]; ++i)
      r.phi[k].push_back(bar_contract(apply_phi(g, r, k - 1, r.boundary[k][i]), n));

  r.psi.resize(3);
  for (std::size_t k = 1; k <= 2; ++k) {
    const LinearSolver solver(r.boundary_matrix[k], Vec(r.boundary_matrix[k].rows()));
    const std::size_t tuples = ipow(n, k);
    for (std::size_t t = 0; t < tuples; ++t) {
      const Vec rhs = apply_psi(g, r, k - 1, bar_boundary(g, k, t));
      auto x = solver.solve(rhs);
      if (!x) throw std::logic_error("resolution: comparison map has no lift");
      r.psi[k].push_back(std::move(*x));
    }
  }
  return r;
}

std::string verify_resolution(const FiniteGroup& g, const Resolution& r) {
  const std::size_t n = g.order();
  // augmentation o d1 = 0 and image d1 = augmentation ideal
  {
    Matrix aug(1, n);
    for (std::size_t x = 0; x < n; ++x) aug(0, x) = 1;
    if (!(aug * r.boundary_matrix[1]).is_zero()) return "augmentation o d1 != 0";
    if (!(column_lattice(r.boundary_matrix[1]) == kernel_lattice(aug, Vec(1)))) return "F1 -> F0 -> Z not exact";
  }
  for (std::size_t k = 2; k <= 3; ++k) {
    if (!(r.boundary_matrix[k - 1] * r.boundary_matrix[k]).is_zero()) return "d o d != 0 in degree " + std::to_string(k);
    const auto& prev = r.boundary_matrix[k - 1];
    if (!(column_lattice(r.boundary_matrix[k]) == kernel_lattice(prev, Vec(prev.rows()))))
      return "not exact at F" + std::to_string(k - 1);
  }
  for (std::size_t k = 1; k <= 2; ++k) {
    for (std::size_t i = 0; i < r.ranks[k]; ++i) {
      // d_bar phi_k(e_i) == phi_{k-1}(d e_i)
      const Vec& img = r.phi[k][i];
      const std::size_t block = ipow(n, k);
      Vec lhs(ipow(n, k));
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t t = 0; t < block; ++t) {
          const Integer& c = img[x * block + t];
          if (!c.is_zero()) axpy(lhs, c, bar_translate(g, static_cast<int>(x), bar_boundary(g, k, t), k - 1));
        }
      if (lhs != apply_phi(g, r, k - 1, r.boundary[k][i])) return "phi is not a chain map in degree " + std::to_string(k);
    }
    for (std::size_t t = 0; t < ipow(n, k); ++t)
      if (r.boundary_matrix[k] * r.psi[k][t] != apply_psi(g, r, k - 1, bar_boundary(g, k, t)))
        return "psi is not a chain map in degree " + std::to_string(k);
  }
  return "";
}

}  // namespace galstruct
