#include "doctest.h"

#include "helpers.hpp"
#include "galstruct/shapiro.hpp"

using namespace galstruct;
using namespace testing_helpers;


TEST_CASE("coinduction basics") {
  auto c2 = catalog_group("C2");
  GSet a = c2_three_points(c2);
  Subgroup h = a.stabilizer(1);
  CoinducedModule ci = coinduce(h, cyclic_module(h.as_group(), 4, {1}));
  CHECK(ci.carrier.torsion_order() == Integer(16));
  CHECK(ci.identification.is_equivariant());

  auto s3 = catalog_group("S3");
  Subgroup full = full_subgroup(s3);
  GModule sign = sign_module(full.as_group(), 0, {1, 2, 5});
  CoinducedModule same = coinduce(full, sign);
  CHECK(same.carrier.dim() == 1);
  CHECK(same.identification.matrix() == Matrix::identity(1));

  Subgroup one = trivial_subgroup(s3);
  CoinducedModule free = coinduce(one, trivial_module(one.as_group()));
  CHECK(free.carrier.dim() == 6);
  CHECK(is_cohomologically_trivial(free.carrier).trivial);
}

TEST_CASE("Shapiro maps are bijective in degrees 0 to 2") {
  for (const auto& c : shapiro_matrix()) {
    CAPTURE(c.label);
    CoinducedModule ci = coinduce(c.s.stabilizer(c.p), c.b);
    for (const GModule& d : {permutation_module(c.s), delta_s(c.s), trivial_module(c.s.group())})
      for (int r = 0; r <= 2; ++r) {
        ShapiroMap sm = shapiro(d, ci, r);
        CHECK(sm.orders_equal);
        CHECK(sm.bijective);
      }
  }
}

TEST_CASE("splitting lambda_p and the Shapiro square") {
  std::size_t nontrivial = 0;
  for (const auto& c : shapiro_matrix()) {
    CAPTURE(c.label);
    ShapiroSplitting r = shapiro_splitting(c.s, c.p, c.b, true);
    for (const auto& ck : r.checks.items()) {
      INFO(ck.name << " " << ck.detail);
      CHECK(ck.status == Status::Pass);
    }
    if (!r.sh_ds.source.is_trivial()) ++nontrivial;
  }
  CHECK(nontrivial >= 2);
}

TEST_CASE("transversal rotation leaves the identification unchanged") {
  auto s3 = catalog_group("S3");
  GSet nat(s3, s3_perms());
  Subgroup st = nat.stabilizer(0);
  GModule b = cyclic_module(st.as_group(), 4, {1, -1});
  CoinducedModule c1 = coinduce(st, b);
  const int h = st.members()[1];
  std::vector<int> t2{0};
  for (std::size_t k = c1.transversal.size(); k-- > 1;) t2.push_back(s3->mul(c1.transversal[k], h));
  CoinducedModule c2 = coinduce(st, b, t2);
  GMap ch = transversal_change(c1, c2), cho = orbit_product_change(c1, c2);
  CHECK(ch.is_equivariant());
  CHECK(cho.is_equivariant());
  CHECK(compose(c2.identification, ch).matrix() == compose(cho, c1.identification).matrix());

  // on cohomology: sh' o change_* = sh
  const GModule ds = delta_s(nat);
  for (int r = 0; r <= 2; ++r) {
    ShapiroMap s1 = shapiro(ds, c1, r), s2 = shapiro(ds, c2, r);
    AbelianHom change = induced(hom_right(ds, ch), s1.source, s2.source);
    AbelianHom lhs = compose(s2.map, change);
    for (const Vec& x : enumerate_elements(s1.source.orders())) CHECK(lhs(x) == s1.map(x));
  }
  CHECK_THROWS(coinduce(st, b, {0, 1, 2}));
}

TEST_CASE("module of commuting triples") {
  auto c2 = catalog_group("C2");
  GSet triv(c2, {{0, 1, 2}, {0, 1, 2}});
  ShortExact top{delta_s_inclusion(triv), permutation_augmentation(triv)};
  HomOfPairs self = hom_of_pairs(top, top);
  CHECK(self.contains_identity);
  CHECK(self.h2_sequence.exact());

  // every term cohomologically trivial
  const GModule zg = regular_module(c2);
  const DirectSum zg2 = direct_sum(c2, {zg, zg});
  HomOfPairs free = hom_of_pairs(top, {zg2.inclusions[0], zg2.projections[1]});
  CHECK(free.h2_triples.is_trivial());
  CHECK(free.h2_pairs.is_trivial());
  CHECK(free.h2_right.is_trivial());
  CHECK(free.h2_sequence.exact());

  // regular S against 0 -> Z -2-> Z -> Z/2 -> 0: the H^2 sequence is not exact
  GSet reg(c2, {{0, 1}, {1, 0}});
  ShortExact rtop{delta_s_inclusion(reg), permutation_augmentation(reg)};
  const GModule z = trivial_module(c2);
  ShortExact two{GMap(z, z, Matrix::from_rows({{2}})), GMap(z, cyclic_module(c2, 2, {1, 1}), Matrix::from_rows({{1}}))};
  HomOfPairs bad = hom_of_pairs(rtop, two);
  CHECK_FALSE(bad.h2_sequence.injective);
  CHECK_FALSE(bad.h2_sequence.exact());
}
