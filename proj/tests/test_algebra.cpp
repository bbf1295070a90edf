#include "doctest.h"
#include "helpers.hpp"

using namespace twistkit;
using testutil::cubic_line;
using testutil::free_algebra;
using testutil::quantum_plane;

TEST_CASE("word encoding is deg-lex with the last letter least significant") {
  CHECK(Word::encode({0, 0}, 2) == 0);
  CHECK(Word::encode({0, 1}, 2) == 1);
  CHECK(Word::encode({1, 0}, 2) == 2);
  CHECK(Word::encode({1, 1}, 2) == 3);
  CHECK(Word::decode(6, 3, 2) == std::vector<std::uint32_t>{1, 1, 0});
  GeneratorSet gens({"x", "y"});
  CHECK(Word::render(2, 2, gens) == "y*x");
  CHECK(Word::render(0, 0, gens) == "1");
}

TEST_CASE("free algebra Hilbert function") {
  auto a = free_algebra(Field::rationals(), 2, 2);
  CHECK(a->hilbert_dims(3) == std::vector<std::size_t>{1, 2, 4, 8});
}

TEST_CASE("quantum plane has polynomial growth") {
  auto a = quantum_plane(Field::rationals(), 2);
  CHECK(a->hilbert_dims(5) == std::vector<std::size_t>{1, 2, 3, 4, 5, 6});
  // J_3 = J_2 (x) V + V (x) R has dimension 8 - 4 = 4
  CHECK(a->component(3).ideal->rank() == 4);
  // pivot on the word xy, so the degree-2 standard words are xx, yx, yy
  CHECK(a->component(2).standard_words ==
        std::vector<std::uint64_t>{0, 2, 3});
}

TEST_CASE("normal forms reduce against the relation") {
  Field q = Field::rationals();
  auto a = quantum_plane(q, 2);
  Element nf = a->normal_form(Tensor::word(q, 2, Word::encode({0, 1}, 2)));
  REQUIRE(nf.coords.size() == 1);
  CHECK(nf.coords[0].first == Word::encode({1, 0}, 2));
  CHECK(nf.coords[0].second == Scalar::from_int(q, 2));

  Element x = a->basis_element(1, 0);
  Element y = a->basis_element(1, 1);
  CHECK(a->multiply(x, y) == nf);
  CHECK(a->render(a->multiply(x, y)) == "2*y*x");
}

TEST_CASE("cubic relation on one generator") {
  auto a = cubic_line(Field::rationals());
  CHECK(a->hilbert_dims(5) ==
        std::vector<std::size_t>{1, 1, 1, 0, 0, 0});
  Element x = a->basis_element(1, 0);
  Element x2 = a->multiply(x, x);
  CHECK(a->multiply(x2, x).is_zero());
}

TEST_CASE("degree cap fails loudly") {
  auto a = testutil::free_algebra(Field::rationals(), 2, 2);
  CHECK_THROWS_AS(a->dim(100), DegreeCapError);
}

TEST_CASE("multiplication is associative on small degrees") {
  Field f = Field::prime(5);
  auto a = quantum_plane(f, 3);
  for (std::size_t p1 = 0; p1 < a->dim(1); ++p1)
    for (std::size_t p2 = 0; p2 < a->dim(1); ++p2)
      for (std::size_t p3 = 0; p3 < a->dim(2); ++p3) {
        Element u = a->basis_element(1, p1);
        Element v = a->basis_element(1, p2);
        Element w = a->basis_element(2, p3);
        CHECK(a->multiply(a->multiply(u, v), w) ==
              a->multiply(u, a->multiply(v, w)));
      }
}

TEST_CASE("shuffle interleaves letters") {
  Field q = Field::rationals();
  // (x0 x1) (x) (w1 w0) |-> (x0,w1)(x1,w0) on 2 x 2 alphabets
  Tensor a = Tensor::word(q, 2, Word::encode({0, 1}, 2));
  Tensor b = Tensor::word(q, 2, Word::encode({1, 0}, 2));
  Tensor sh = shuffle(a, b, 2, 2);
  REQUIRE(sh.coords().size() == 1);
  // pair letters: (0,1) -> 1 and (1,0) -> 2 in the row-major pair alphabet
  CHECK(sh.coords()[0].first == Word::encode({1, 2}, 4));
}
