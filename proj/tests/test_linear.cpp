#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace twistkit;
using testutil::diag;

TEST_CASE("rational arithmetic is exact") {
  Field q = Field::rationals();
  Scalar a = Scalar::from_fraction(q, 1, 2);
  Scalar b = Scalar::from_fraction(q, 1, 3);
  CHECK((a + b).to_string() == "5/6");
  CHECK((a * b).to_string() == "1/6");
  CHECK((a - a).is_zero());
  CHECK(Scalar::parse(q, "3/4") == Scalar::from_fraction(q, 3, 4));
  CHECK(Scalar::parse(q, "-7") == Scalar::from_int(q, -7));
  CHECK_THROWS_AS(Scalar::from_int(q, 0).inverse(), ScalarError);
}

TEST_CASE("prime field arithmetic") {
  Field f7 = Field::prime(7);
  Scalar three = Scalar::from_int(f7, 3);
  CHECK(Scalar::from_int(f7, -1) == Scalar::from_int(f7, 6));
  CHECK((three * three.inverse()).is_one());
  CHECK((three + Scalar::from_int(f7, 4)).is_zero());
  CHECK_THROWS_AS(Field::prime(9), ScalarError);
}

TEST_CASE("default scalar is a universal additive identity") {
  Field f7 = Field::prime(7);
  Scalar z;  // rational zero
  CHECK(z + Scalar::from_int(f7, 3) == Scalar::from_int(f7, 3));
  CHECK(Scalar::from_int(f7, 3) + z == Scalar::from_int(f7, 3));
  CHECK(z - Scalar::from_int(f7, 3) == Scalar::from_int(f7, 4));
}

TEST_CASE("matrix inverse and kron") {
  Field q = Field::rationals();
  Matrix m = diag(q, {1, 3});
  auto inv = m.inverse();
  REQUIRE(inv);
  CHECK(*inv * m == Matrix::identity(q, 2));

  Matrix dual(q, 2, 2);
  dual.at(0, 0) = Scalar::one(q);
  dual.at(1, 1) = Scalar::from_fraction(q, 1, 3);
  Matrix k = m.kron(dual);
  // diag(1,3) (x) diag(1,1/3) = diag(1, 1/3, 3, 1)
  CHECK(k.at(0, 0).is_one());
  CHECK(k.at(1, 1) == Scalar::from_fraction(q, 1, 3));
  CHECK(k.at(2, 2) == Scalar::from_int(q, 3));
  CHECK(k.at(3, 3).is_one());
  CHECK(k.at(0, 1).is_zero());

  Matrix sing(q, 2, 2);
  sing.at(0, 0) = Scalar::one(q);
  sing.at(1, 0) = Scalar::one(q);
  CHECK(!sing.inverse());
}

TEST_CASE("rref is canonical and idempotent on random F_p matrices") {
  Field f = Field::prime(101);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(0, 100);
  for (int trial = 0; trial < 25; ++trial) {
    Matrix m(f, 4, 7);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 7; ++c)
        m.at(r, c) = Scalar::from_int(f, dist(rng));
    RrefResult first = rref(m);
    RrefResult again = rref(first.matrix);
    CHECK(first.matrix == again.matrix);
    CHECK(first.pivots == again.pivots);
    for (std::size_t i = 1; i < first.pivots.size(); ++i)
      CHECK(first.pivots[i - 1] < first.pivots[i]);
    // row order does not change the span
    Matrix swapped = m;
    for (std::size_t c = 0; c < 7; ++c)
      std::swap(swapped.at(0, c), swapped.at(3, c));
    CHECK(Subspace::span(m) == Subspace::span(swapped));
  }
}

TEST_CASE("annihilator dimensions and double annihilator") {
  Field q = Field::rationals();
  // span(x(x)y - 2 y(x)x) inside the 4-dimensional degree-2 word space
  Matrix rows(q, 1, 4);
  rows.at(0, 1) = Scalar::one(q);
  rows.at(0, 2) = Scalar::from_int(q, -2);
  Subspace r = Subspace::span(rows);
  Subspace perp = r.annihilator();
  CHECK(perp.dim() == 3);
  CHECK(perp.annihilator() == r);

  Field f = Field::prime(11);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(0, 10);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m(f, 3, 6);
    for (std::size_t r2 = 0; r2 < 3; ++r2)
      for (std::size_t c = 0; c < 6; ++c)
        m.at(r2, c) = Scalar::from_int(f, dist(rng));
    Subspace s = Subspace::span(m);
    CHECK(s.annihilator().dim() == 6 - s.dim());
    CHECK(s.annihilator().annihilator() == s);
  }
}

TEST_CASE("kernel dimension matches rank") {
  Field q = Field::rationals();
  Matrix m(q, 2, 4);
  m.at(0, 0) = Scalar::one(q);
  m.at(1, 1) = Scalar::one(q);
  CHECK(kernel(m).dim() == 2);
}
