#include "galstruct/isotest.hpp"

#include "galstruct/cohomology.hpp"
#include "galstruct/error.hpp"

#include <functional>

namespace galstruct {

namespace {

std::size_t fixed_rank(const GModule& lattice, const Subgroup& h) {
  Integer sum(0);
  for (int x : h.members()) sum += lattice.action(x).trace();
  return std::size_t((sum / Integer(static_cast<long long>(h.order()))).to_ll());
}

std::string vec_str(const Vec& v) { return to_string(v); }

}  // namespace

Fingerprint fingerprint(const GModule& m) {
  Fingerprint f;
  f.free_rank = m.free_rank();
  f.invariant_factors = m.invariant_factors();
  const GModule lat = torsion_split(m).lattice.module;
  for (const Subgroup& h : subgroups(m.group())) {
    SubgroupInvariants si;
    si.members = h.members();
    const GModule res = restrict_module(m, h);
    for (int r = -1; r <= 2; ++r) si.tate.push_back(CohGroup(res, r).orders());
    si.fixed_rank = fixed_rank(lat, h);
    f.subgroups.push_back(std::move(si));
  }
  return f;
}

std::string fingerprint_difference(const Fingerprint& a, const Fingerprint& b) {
  if (a.free_rank != b.free_rank)
    return "free rank " + std::to_string(a.free_rank) + " vs " + std::to_string(b.free_rank);
  if (a.invariant_factors != b.invariant_factors)
    return "torsion " + vec_str(a.invariant_factors) + " vs " + vec_str(b.invariant_factors);
  for (std::size_t i = 0; i < a.subgroups.size() && i < b.subgroups.size(); ++i) {
    const auto& x = a.subgroups[i];
    const auto& y = b.subgroups[i];
    std::string where = "subgroup of order " + std::to_string(x.members.size()) + " #" + std::to_string(i);
    for (std::size_t r = 0; r < x.tate.size(); ++r)
      if (x.tate[r] != y.tate[r])
        return where + ": H^" + std::to_string(int(r) - 1) + " " + vec_str(x.tate[r]) + " vs " + vec_str(y.tate[r]);
    if (x.fixed_rank != y.fixed_rank)
      return where + ": fixed rank " + std::to_string(x.fixed_rank) + " vs " + std::to_string(y.fixed_rank);
  }
  if (a.subgroups.size() != b.subgroups.size()) return "different groups";
  return "";
}

std::vector<Matrix> equivariant_hom_basis(const GModule& m, const GModule& n) {
  const GModule hom = hom_module(m, n);
  const std::size_t k = hom.dim();
  // invariance under a generating set suffices
  const std::vector<int> gens = m.group()->order() > 1 ? min_generators(*m.group()).generators : std::vector<int>{};
  Matrix a(k * gens.size(), k);
  Vec row_moduli;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const Matrix& rho = hom.action(gens[gi]);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) a(gi * k + i, j) = rho(i, j) - Integer(i == j ? 1 : 0);
      row_moduli.push_back(hom.moduli()[i]);
    }
  }
  std::vector<Matrix> out;
  Lattice ker = kernel_lattice(a, row_moduli);
  ker.reduce();
  for (const Vec& v : ker.basis()) {
    Vec r = hom.reduce(v);
    if (is_zero(r)) continue;
    out.push_back(hom_to_matrix(m, n, r));
  }
  return out;
}

bool is_isomorphism(const GModule& m, const GModule& n, const Matrix& f) {
  if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
  try {
    if (!GMap(m, n, f).is_equivariant()) return false;
  } catch (const Error&) {
    return false;
  }
  return AbelianHom(m.moduli(), n.moduli(), f).is_bijective();
}

std::string to_string(IsoOutcome o) {
  switch (o) {
    case IsoOutcome::Iso: return "iso";
    case IsoOutcome::NonIso: return "noniso";
    case IsoOutcome::Unknown: break;
  }
  return "unknown";
}

IsoVerdict iso_search(const GModule& m, const GModule& n, const IsoEffort& effort) {
  IsoVerdict v;
  std::string diff = fingerprint_difference(fingerprint(m), fingerprint(n));
  if (!diff.empty()) {
    v.outcome = IsoOutcome::NonIso;
    v.witness = diff;
    return v;
  }
  if (m.dim() > effort.max_rank || n.dim() > effort.max_rank) return v;

  auto accept = [&](const Matrix& f) {
    ++v.candidates_tried;
    if (!is_isomorphism(m, n, f)) return false;
    v.outcome = IsoOutcome::Iso;
    v.certificate = f.reduce_rows(n.moduli());
    return true;
  };
  if (m.moduli() == n.moduli() && accept(Matrix::identity(m.dim()))) return v;

  const std::vector<Matrix> basis = equivariant_hom_basis(m, n);
  std::vector<Integer> coeffs;
  for (int c = 1; c <= effort.coefficient_bound; ++c) {
    coeffs.push_back(Integer(c));
    coeffs.push_back(Integer(-c));
  }
  // support sets in lexicographic order, coefficient tuples in odometer order
  std::vector<std::size_t> support;
  std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t left) -> bool {
    if (left == 0) {
      std::vector<std::size_t> digit(support.size(), 0);
      while (true) {
        if (v.candidates_tried >= effort.max_candidates) return true;
        Matrix f(n.dim(), m.dim());
        for (std::size_t i = 0; i < support.size(); ++i) f = f + coeffs[digit[i]] * basis[support[i]];
        if (accept(f)) return true;
        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == coeffs.size()) digit[i++] = 0;
        if (i == digit.size()) return false;
      }
    }
    for (std::size_t b = start; b + left <= basis.size(); ++b) {
      support.push_back(b);
      if (choose(b + 1, left - 1)) return true;
      support.pop_back();
    }
    return false;
  };
  for (std::size_t s = 1; s <= basis.size(); ++s)
    if (choose(0, s)) break;
  return v;
}

IsoVerdict stable_iso_check(const GModule& m, const GModule& n, std::size_t a, std::size_t b, const IsoEffort& effort) {
  return iso_search(add_free(m, a), add_free(n, b), effort);
}

}  // namespace galstruct
