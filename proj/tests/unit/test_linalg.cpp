#include "doctest.h"

#include "galstruct/linalg.hpp"

#include <random>

using namespace galstruct;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("integer promotes on overflow and demotes back") {
  Integer a(std::int64_t{1} << 62);
  Integer b = a * 4;
  CHECK_FALSE(b.is_small());
  CHECK(b / 4 == a);
  CHECK((b / 4).is_small());
  CHECK(gcd(Integer(12), Integer(-18)) == 6);
  auto e = extended_gcd(Integer(240), Integer(46));
  CHECK(e.g == 2);
  CHECK(e.x * 240 + e.y * 46 == 2);
  CHECK(mod_floor(Integer(-7), Integer(3)) == 2);
  CHECK(floor_div(Integer(-7), Integer(3)) == -3);
}

TEST_CASE("determinant matches cofactor expansion on 3x3") {
  Matrix m = Matrix::from_rows({{2, -1, 0}, {1, 3, 4}, {0, 5, -2}});
  CHECK(determinant(m) == 2 * (3 * -2 - 4 * 5) + 1 * (1 * -2 - 0));
}

TEST_CASE("smith form reconstructs and forms a divisibility chain") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
    Matrix a = random_matrix(rng, r, c, -6, 6);
    SmithForm s = smith_form(a);
    Matrix d = s.u * a * s.v;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) CHECK(d(i, j) == (i == j && i < s.rank ? s.diagonal[i] : Integer(0)));
    CHECK(s.v * s.v_inv == Matrix::identity(c));
    CHECK(abs(determinant(s.u)) == 1);
    for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK((s.diagonal[i + 1] % s.diagonal[i]).is_zero());
  }
}

TEST_CASE("kernel lattice agrees with brute force membership") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix a = random_matrix(rng, 2, 3, -3, 3);
    Vec mod{Integer(trial % 3 == 0 ? 0 : 4), Integer(0)};
    Lattice k = kernel_lattice(a, mod);
    for (int x = -4; x <= 4; ++x)
      for (int y = -4; y <= 4; ++y)
        for (int z = -4; z <= 4; ++z) {
          Vec v{Integer(x), Integer(y), Integer(z)};
          Vec av = a * v;
          bool in = reduce_mod(av, mod) == Vec{Integer(0), Integer(0)};
          CHECK(k.contains(v) == in);
        }
  }
}

TEST_CASE("subquotient of Z^2 by <(2,0),(0,3)> is Z/6") {
  Subquotient q(Lattice::full(2), {Vec{Integer(2), Integer(0)}, Vec{Integer(0), Integer(3)}});
  CHECK(q.orders() == Vec{Integer(6)});
  Vec g = q.generators()[0];
  CHECK(q.encode(g) == Vec{Integer(1)});
  CHECK(q.encode(Integer(6) * g) == Vec{Integer(0)});
}

TEST_CASE("subquotient encode/lift round trip on random data") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix gens = random_matrix(rng, 4, 3, -5, 5);
    Lattice num = Lattice::full(4);
    std::vector<Vec> den;
    for (std::size_t j = 0; j < 3; ++j) den.push_back(gens.column(j));
    Subquotient q(num, den);
    Lattice d = Lattice::from_generators(4, den);
    for (std::size_t f = 0; f < q.num_factors(); ++f) {
      Vec c(q.num_factors());
      c[f] = 1;
      CHECK(q.encode(q.lift(c)) == c);
    }
    for (const auto& v : den) CHECK(is_zero(q.encode(v)));
    Vec x = random_matrix(rng, 4, 1, -9, 9).column(0);
    CHECK(d.contains(x - q.lift(q.encode(x))));
  }
}

TEST_CASE("linear solver handles moduli") {
  Matrix a = Matrix::from_rows({{2, 0}, {0, 3}});
  LinearSolver s(a, Vec{Integer(5), Integer(0)});
  auto y = s.solve(Vec{Integer(1), Integer(6)});
  REQUIRE(y);
  CHECK(mod_floor((*y)[0] * 2 - 1, Integer(5)) == 0);
  CHECK((*y)[1] == 2);
  CHECK_FALSE(s.solve(Vec{Integer(0), Integer(1)}));
}
