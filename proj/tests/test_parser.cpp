#include "doctest.h"
#include "helpers.hpp"
#include "twistkit/parser.hpp"

using namespace twistkit;

namespace {

const char* kQuantumPlaneDoc = R"(# quantum plane
field Q
cap 5
algebra qp
  gens x y
  deg 2
  rel x*y - 2*y*x
end
twist t on qp
  power [[1,0],[0,3]]
end
)";

}  // namespace

TEST_CASE("parses the quantum-plane document") {
  Document doc = parse_document(kQuantumPlaneDoc);
  CHECK(doc.config.field.is_rational());
  CHECK(doc.config.cap == 5);
  REQUIRE(doc.algebras.size() == 1);
  const AlgebraBlock& a = doc.algebras[0];
  CHECK(a.name == "qp");
  CHECK(a.gens == std::vector<std::string>{"x", "y"});
  CHECK(a.m == 2);
  REQUIRE(a.relations.size() == 1);
  CHECK(a.relations[0].render(GeneratorSet(a.gens)) == "x*y - 2*y*x");
  REQUIRE(doc.twists.size() == 1);
  REQUIRE(doc.twists[0].power);
  CHECK(doc.twists[0].power->at(1, 1) ==
        Scalar::from_int(Field::rationals(), 3));

  auto alg = build_algebra(doc, a);
  CHECK(alg->hilbert_dims(3) == std::vector<std::size_t>{1, 2, 3, 4});
}

TEST_CASE("print-parse is a fixpoint") {
  Document doc = parse_document(kQuantumPlaneDoc);
  std::string printed = print_document(doc);
  Document again = parse_document(printed);
  CHECK(doc == again);
  CHECK(print_document(again) == printed);
}

TEST_CASE("fixpoint holds over a prime field with explicit indices") {
  const char* text = R"(
field Fp 11
cap 4
window 0 6
seed 7
algebra skew
  gens x y z
  deg 2
  rel x*y - 2*y*x
  rel 3*x*z - 5*z*x + y*y
end
twist e on skew
  explicit 1 [[1,0,0],[0,3,0],[0,0,4]]
  explicit 2 [[1,0,0],[0,9,0],[0,0,5]]
end
)";
  Document doc = parse_document(text);
  Document again = parse_document(print_document(doc));
  CHECK(doc == again);
}

TEST_CASE("empty relation list yields a free algebra") {
  Document doc = parse_document(
      "field Q\nalgebra f\n gens a b\n deg 2\nend\n");
  auto alg = build_algebra(doc, doc.algebras[0]);
  CHECK(alg->hilbert_dims(3) == std::vector<std::size_t>{1, 2, 4, 8});
}

TEST_CASE("relation word length must match the homogeneity degree") {
  const char* text =
      "field Q\nalgebra a\n gens x y\n deg 2\n rel x*y*y\nend\n";
  CHECK_THROWS_WITH_AS(parse_document(text),
                       "line 5, column 6: word length 3 != deg 2",
                       ParseError);
}

TEST_CASE("parse errors carry positions and causes") {
  CHECK_THROWS_AS(
      parse_document("field Q\nalgebra a\n gens x\n deg 2\n rel x*q\nend\n"),
      ParseError);  // unknown generator
  CHECK_THROWS_AS(parse_document("field Fp 10\n"), ParseError);  // not prime
  CHECK_THROWS_AS(
      parse_document("field Q\nalgebra a\n gens x\n deg 2\n rel x*x\nend\n"
                     "twist t on a\n power [[1/]]\nend\n"),
      ParseError);  // malformed scalar
  CHECK_THROWS_AS(
      parse_document("field Q\nalgebra a\n gens x\n deg 2\nend\n"
                     "twist t on a\n power [[0]]\nend\n"),
      ParseError);  // non-invertible matrix
  CHECK_THROWS_AS(
      parse_document("field Q\ntwist t on a\n power [[1]]\nend\n"),
      ParseError);  // unknown algebra
  try {
    parse_document("field Q\nalgebra a\n gens x y\n deg 2\n rel x*w\nend\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 5);
    CHECK(std::string(e.what()).find("unknown generator 'w'") !=
          std::string::npos);
  }
}

TEST_CASE("builds twists with the requested window") {
  Document doc = parse_document(kQuantumPlaneDoc);
  TwistingSystem t = build_twist(doc, doc.twists[0], IndexWindow{0, 7});
  CHECK(t.one_parameter_form());
  CHECK(t.window() == IndexWindow{0, 7});
  CHECK(t.deg1(2).at(1, 1) == Scalar::from_int(Field::rationals(), 9));
}
