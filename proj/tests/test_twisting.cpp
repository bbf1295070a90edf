#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace twistkit;
using testutil::diag;
using testutil::quantum_plane;

namespace {

TwistingSystem diag13(const Algebra& a) {
  return TwistingSystem::one_parameter(a.gens(),
                                       diag(a.field(), {1, 3}),
                                       IndexWindow{0, 8});
}

}  // namespace

TEST_CASE("zhang twist of the commutative plane") {
  Field q = Field::rationals();
  GeneratorSet gens({"x", "y"});
  SparseVec c;
  c.emplace_back(Word::encode({0, 1}, 2), Scalar::one(q));
  c.emplace_back(Word::encode({1, 0}, 2), -Scalar::one(q));
  auto a = Algebra::make(q, gens, 2, {Tensor::from_sparse(q, 2, std::move(c))});
  auto tw = zhang_twist(*a, diag13(*a));
  auto rels = tw.presentation->relation_basis();
  REQUIRE(rels.size() == 1);
  CHECK(rels[0].render(gens) == "x*y - 3*y*x");
}

TEST_CASE("zhang twist of the quantum plane at q = 2") {
  auto a = quantum_plane(Field::rationals(), 2);
  auto tw = zhang_twist(*a, diag13(*a));
  auto rels = tw.presentation->relation_basis();
  REQUIRE(rels.size() == 1);
  CHECK(rels[0].render(a->gens()) == "x*y - 6*y*x");
}

TEST_CASE("inductive extension on a degree-2 word") {
  // tau_1(y y) = tau_1(y) tau_2(itau_1(y)) = 3y * 3y = 9 y(x)y for diag(1,3)
  auto a = quantum_plane(Field::rationals(), 2);
  TwistingSystem t = diag13(*a);
  Tensor img = t.apply(1, Tensor::word(a->field(), 2, Word::encode({1, 1}, 2)));
  REQUIRE(img.coords().size() == 1);
  CHECK(img.coords()[0].first == Word::encode({1, 1}, 2));
  CHECK(img.coords()[0].second == Scalar::from_int(a->field(), 9));
}

TEST_CASE("axiom suite passes for the diagonal twist") {
  auto a = quantum_plane(Field::rationals(), 2);
  Report rep = verify_axioms(diag13(*a), *a, 4);
  CHECK(rep.all_pass());
}

TEST_CASE("swap matrix fails to preserve the relation space") {
  auto a = quantum_plane(Field::rationals(), 2);
  Matrix swap(a->field(), 2, 2);
  swap.at(0, 1) = Scalar::one(a->field());
  swap.at(1, 0) = Scalar::one(a->field());
  TwistingSystem t =
      TwistingSystem::one_parameter(a->gens(), swap, IndexWindow{0, 4});
  Report rep = check_preserves_R(t, *a);
  CHECK(!rep.all_pass());
  bool witnessed = false;
  for (auto& r : rep.records)
    if (r.status == CheckStatus::Fail && !r.witness.empty()) witnessed = true;
  CHECK(witnessed);
  CHECK_THROWS(zhang_twist(*a, t));
}

TEST_CASE("explicit systems fail loudly outside their window") {
  auto a = quantum_plane(Field::rationals(), 2);
  std::map<int, Matrix> maps;
  maps.emplace(1, diag(a->field(), {1, 3}));
  TwistingSystem t =
      TwistingSystem::explicit_maps(a->gens(), maps, IndexWindow{0, 1});
  CHECK_THROWS_AS(t.deg1(5), WindowError);
  CHECK(t.index_available(1));
  CHECK(!t.index_available(5));
}

TEST_CASE("twisting by the inverse system restores the relations") {
  auto a = quantum_plane(Field::rationals(), 2);
  TwistingSystem t = diag13(*a);
  auto tw = zhang_twist(*a, t);
  auto back = zhang_twist(*tw.presentation, t.inverse_system());
  CHECK(back.presentation->relation_space() == a->relation_space());
}

TEST_CASE("twisted product multiplies through tau") {
  auto a = quantum_plane(Field::rationals(), 2);
  TwistingSystem t = diag13(*a);
  Element x = a->basis_element(1, 0);
  Element y = a->basis_element(1, 1);
  // x ._tau y = x tau_1(y) = 3 x y = 6 y x in A
  Element prod = twisted_product(*a, t, x, y);
  CHECK(a->render(prod) == "6*y*x");
  // y ._tau x = y tau_1(x) = y x
  CHECK(a->render(twisted_product(*a, t, y, x)) == "y*x");
}

TEST_CASE("random diagonal twists preserve the Hilbert function") {
  Field f = Field::prime(13);
  auto a = quantum_plane(f, 5);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> dist(1, 12);
  for (int trial = 0; trial < 10; ++trial) {
    TwistingSystem t = TwistingSystem::one_parameter(
        a->gens(), diag(f, {dist(rng), dist(rng)}), IndexWindow{0, 6});
    REQUIRE(check_preserves_R(t, *a).all_pass());
    auto tw = zhang_twist(*a, t);
    CHECK(tw.presentation->hilbert_dims(4) == a->hilbert_dims(4));
  }
}
