#include "doctest.h"

#include "helpers.hpp"
#include "galstruct/cohomology.hpp"
#include "galstruct/error.hpp"

using namespace galstruct;
using namespace testing_helpers;

TEST_CASE("standard modules") {
  auto c2 = catalog_group("C2");
  GModule dg = augmentation_ideal(c2);
  CHECK(dg.dim() == 1);
  CHECK(dg.action(1)(0, 0) == Integer(-1));

  GSet s = c2_three_points(c2);
  GModule ds = delta_s(s);
  CHECK(ds.dim() == 2);
  CHECK(ds.is_lattice());
  CHECK(action_is_valid(ds));

  auto s3 = catalog_group("S3");
  GModule f = regular_module(s3, 2);
  CHECK(f.dim() == 12);
  CHECK(action_is_valid(f));
  GSet nat = natural_action(s3, s3_perms());
  CHECK(permutation_module(nat).dim() == 3);
  CHECK(delta_s(nat).dim() == 2);
  CHECK_THROWS_WITH_AS(standard_module(s3, StandardKind::DeltaS), doctest::Contains("MissingGSet"), Error);

  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    CAPTURE(name);
    CHECK(action_is_valid(augmentation_ideal(g)));
    CHECK(action_is_valid(dual_lattice(augmentation_ideal(g))));
    CHECK(augmentation_inclusion(g).is_equivariant());
    CHECK(augmentation_map(g).is_equivariant());
    if (g->order() > 1) {
      auto ex = check_exact({augmentation_inclusion(g), augmentation_map(g)});
      CHECK(ex.exact);
    }
  }
  CHECK_THROWS_WITH_AS(cyclic_module(catalog_group("C3"), 3, {Integer(1), Integer(2), Integer(2)}), doctest::Contains("InvalidModule"), Error);
}

TEST_CASE("tensor and Hom ranks") {
  auto c2 = catalog_group("C2");
  GSet s = c2_three_points(c2);
  GModule dg = augmentation_ideal(c2), ds = delta_s(s);
  GModule l1 = tensor(dg, ds);
  GModule l2 = tensor(dg, l1);
  CHECK(l1.dim() == 2);
  CHECK(l2.dim() == 2);
  CHECK(action_is_valid(l1));
  CHECK(action_is_valid(l2));

  GModule mu = sign_module(c2, 3, {1});
  GModule h = hom_module(ds, mu);
  CHECK(h.is_finite());
  CHECK(h.torsion_order() == Integer(9));
  CHECK(action_is_valid(h));

  // torsion into a lattice contributes nothing
  GModule zg = regular_module(c2);
  GModule omega = direct_sum(c2, {mu, zg}).module;
  CHECK(same_module(hom_module(omega, l1), hom_module(zg, l1)));

  auto s3 = catalog_group("S3");
  GModule a = augmentation_ideal(s3);
  GModule t = tensor(a, a);
  CHECK(t.dim() == 25);
  CHECK(hom_module(a, regular_module(s3)).dim() == 30);
  CHECK(action_is_valid(hom_module(a, a)));

  // Z/4 (x) Z/6 = Z/2, Hom(Z/4, Z/6) = Z/2
  auto c1 = catalog_group("C1");
  GModule z4 = cyclic_module(c1, 4, {Integer(1)}), z6 = cyclic_module(c1, 6, {Integer(1)});
  CHECK(tensor(z4, z6).moduli() == Vec{Integer(2)});
  CHECK(hom_module(z4, z6).moduli() == Vec{Integer(2)});
  CHECK(hom_module(z4, trivial_module(c1)).dim() == 0);
}

TEST_CASE("Hom and tensor are functorial") {
  auto s3 = catalog_group("S3");
  GModule a = augmentation_ideal(s3), zg = regular_module(s3), z = trivial_module(s3);
  GMap i = augmentation_inclusion(s3), e = augmentation_map(s3);
  // Hom(e o i, Z) = Hom(i, Z) o Hom(e, Z)
  GMap lhs = hom_left(compose(e, i), z);
  GMap rhs = compose(hom_left(i, z), hom_left(e, z));
  CHECK(lhs.matrix() == rhs.matrix());
  CHECK(lhs.is_equivariant());
  // Hom(Z, -) covariant
  GMap l2 = hom_right(z, compose(e, i));
  GMap r2 = compose(hom_right(z, e), hom_right(z, i));
  CHECK(l2.matrix() == r2.matrix());
  // tensor of composites
  GMap t1 = tensor_map(compose(e, i), identity_map(a));
  GMap t2 = compose(tensor_map(e, identity_map(a)), tensor_map(i, identity_map(a)));
  CHECK(t1.matrix() == t2.matrix());
  CHECK(t1.matrix().is_zero());
}

TEST_CASE("exactness verdicts") {
  auto c2 = catalog_group("C2");
  GSet s = c2_three_points(c2);
  GModule zs = permutation_module(s), z = trivial_module(c2);
  CHECK(check_exact({delta_s_inclusion(s), permutation_augmentation(s)}).exact);
  // ZS -> Z, p -> 2 is not onto
  Matrix twice(1, 3);
  for (std::size_t k = 0; k < 3; ++k) twice(0, k) = 2;
  auto bad = check_exact({delta_s_inclusion(s), GMap(zs, z, twice)});
  CHECK_FALSE(bad.exact);
  CHECK(bad.node.find("surjectiv") != std::string::npos);
  // the inclusion does not compose to zero with a non-augmentation
  Matrix first(1, 3);
  first(0, 0) = 1;
  CHECK_FALSE(check_exact({delta_s_inclusion(s), GMap(zs, z, first)}).exact);
  CHECK_THROWS_WITH_AS(check_exact({permutation_augmentation(s), delta_s_inclusion(s)}),
                       doctest::Contains("NotComposable"), Error);
}

TEST_CASE("restriction, torsion split and free summands") {
  auto s3 = catalog_group("S3");
  for (const auto& h : subgroups(s3)) {
    GModule r = restrict_module(regular_module(s3), h);
    CHECK(r.dim() == 6);
    CHECK(action_is_valid(r));
    if (h.as_group()->order() > 1) CHECK(CohGroup(r, 0).is_trivial());
  }
  auto c2 = catalog_group("C2");
  GModule mu = sign_module(c2, 3, {1});
  GModule omega = direct_sum(c2, {mu, regular_module(c2)}).module;
  TorsionSplit ts = torsion_split(omega);
  CHECK(ts.torsion.module.torsion_order() == Integer(3));
  CHECK(ts.lattice.module.is_lattice());
  CHECK(ts.lattice.module.dim() == 2);
  CHECK(check_exact({ts.torsion.inclusion, ts.lattice.projection}).exact);
  CHECK(add_free(augmentation_ideal(c2), 2).dim() == 5);
}

TEST_CASE("kernels and cokernels") {
  auto c3 = catalog_group("C3");
  GMap e = augmentation_map(c3);
  Sub k = kernel(e);
  CHECK(k.module.dim() == 2);
  CHECK(CohGroup(k.module, 0).is_trivial());
  CHECK(CohGroup(k.module, 1).orders() == Vec{Integer(3)});
  Quot q = cokernel(augmentation_inclusion(c3));
  CHECK(q.module.dim() == 1);
  CHECK(q.projection.is_equivariant());
  CHECK(q.module.action(1)(0, 0) == Integer(1));
  // multiplication by 2 on Z/6 (trivial C1): kernel Z/2, cokernel Z/2
  auto c1 = catalog_group("C1");
  GModule z6 = cyclic_module(c1, 6, {Integer(1)});
  auto kic = map_kernel_image_cokernel(GMap(z6, z6, Matrix::from_rows({{2}})));
  CHECK(kic.kernel.module.torsion_order() == Integer(2));
  CHECK(kic.image.module.torsion_order() == Integer(3));
  CHECK(kic.cokernel.module.torsion_order() == Integer(2));
}
