#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace twistkit;
using testutil::diag;
using testutil::quantum_plane;

namespace {

struct Fixture {
  std::shared_ptr<const EndR> er;
  TwistingSystem t;
  TwistingPair pair;

  Fixture()
      : er(std::make_shared<EndR>(quantum_plane(Field::rationals(), 2))),
        t(TwistingSystem::one_parameter(er->base().gens(),
                                        diag(Field::rationals(), {1, 3}),
                                        IndexWindow{0, 8})),
        pair(pair_from_twist(er, t)) {}
};

}  // namespace

TEST_CASE("pair sides act diagonally on the generators") {
  Fixture fx;
  const Field q = Field::rationals();
  // tau-side_1 = diag(1,3) (x) id = diag(1,1,3,3) on (z_1^1,z_1^2,z_2^1,z_2^2)
  Matrix tau1 = fx.pair.tau_side.deg1(1);
  CHECK(tau1.at(0, 0).is_one());
  CHECK(tau1.at(1, 1).is_one());
  CHECK(tau1.at(2, 2) == Scalar::from_int(q, 3));
  CHECK(tau1.at(3, 3) == Scalar::from_int(q, 3));
  // mu-side_1 = id (x) diag(1,1/3) = diag(1,1/3,1,1/3)
  Matrix mu1 = fx.pair.mu_side.deg1(1);
  CHECK(mu1.at(0, 0).is_one());
  CHECK(mu1.at(1, 1) == Scalar::from_fraction(q, 1, 3));
  CHECK(mu1.at(2, 2).is_one());
  CHECK(mu1.at(3, 3) == Scalar::from_fraction(q, 1, 3));
}

TEST_CASE("pair axioms and coaction diagrams hold") {
  Fixture fx;
  CHECK(verify_pair(fx.pair, 3).all_pass());
}

TEST_CASE("twisting functionals on the generators") {
  Fixture fx;
  Functionals fn(fx.pair);
  const Algebra& e = fx.er->bialgebra();
  const Field q = Field::rationals();
  Element z22 = e.basis_element(1, fx.er->z_letter(1, 1));
  Element z12 = e.basis_element(1, fx.er->z_letter(0, 1));
  CHECK(fn.alpha(1, z22) == Scalar::from_int(q, 3));
  CHECK(fn.alpha(1, z12).is_zero());
  CHECK(fn.alpha_inv(1, z22) == Scalar::from_fraction(q, 1, 3));
  CHECK(fn.verify(3).all_pass());
}

TEST_CASE("winding maps recover both sides of the pair") {
  Fixture fx;
  Functionals fn(fx.pair);
  CHECK(verify_winding(fn, 3).all_pass());
}

TEST_CASE("free inductive extension matches the counit composites") {
  Fixture fx;
  Functionals fn(fx.pair);
  CHECK(verify_inductive_extension(fn, 3).all_pass());
}

TEST_CASE("cocycle values on the generators") {
  Fixture fx;
  Cocycle c(fx.pair);
  const Algebra& e = fx.er->bialgebra();
  const Field q = Field::rationals();
  Element z11 = e.basis_element(1, fx.er->z_letter(0, 0));
  Element z12 = e.basis_element(1, fx.er->z_letter(0, 1));
  Element z22 = e.basis_element(1, fx.er->z_letter(1, 1));
  CHECK(c.sigma(z11, z22) == Scalar::from_int(q, 3));
  CHECK(c.sigma(z12, z22).is_zero());
  CHECK(c.sigma_inv(z11, z22) == Scalar::from_fraction(q, 1, 3));
  CHECK(c.verify(4).all_pass());
}

TEST_CASE("deformed product equals the composed twist") {
  Fixture fx;
  Cocycle c(fx.pair);
  CHECK(verify_composed_twist(c, 3).all_pass());
}

TEST_CASE("comodule cocycle product is the twisted product") {
  Fixture fx;
  Cocycle c(fx.pair);
  const Algebra& a = fx.er->base();
  Element x = a.basis_element(1, 0);
  Element y = a.basis_element(1, 1);
  // x ._sigma y = 3 x y = 6 y x; y ._sigma x = y x
  CHECK(a.render(comodule_cocycle_product(c, x, y)) == "6*y*x");
  CHECK(a.render(comodule_cocycle_product(c, y, x)) == "y*x");
  CHECK(comodule_cocycle_product(c, x, y) ==
        twisted_product(a, fx.t, x, y));
}

TEST_CASE("main theorem verifier passes on the quantum plane") {
  Fixture fx;
  CHECK(verify_main_theorem(fx.er, fx.t, 4).all_pass());
}

TEST_CASE("degree-one twist recovery from the functionals") {
  Fixture fx;
  Functionals fn(fx.pair);
  TwistingSystem rt = twist_from_cocycle(fx.er->base(), fn);
  for (int i = 0; i <= 4; ++i) CHECK(rt.deg1(i) == fx.t.deg1(i));
}

TEST_CASE("theorem holds for random diagonal twists over F_11") {
  Field f = Field::prime(11);
  GeneratorSet gens({"x", "y", "z"});
  auto rel = [&](std::uint32_t i, std::uint32_t j, long c) {
    SparseVec v;
    v.emplace_back(Word::encode({i, j}, 3), Scalar::one(f));
    v.emplace_back(Word::encode({j, i}, 3), -Scalar::from_int(f, c));
    return Tensor::from_sparse(f, 2, std::move(v));
  };
  auto a = Algebra::make(f, gens, 2, {rel(0, 1, 2), rel(0, 2, 5), rel(1, 2, 3)});
  auto er = std::make_shared<EndR>(a);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> dist(1, 10);
  for (int trial = 0; trial < 3; ++trial) {
    TwistingSystem t = TwistingSystem::one_parameter(
        a->gens(), diag(f, {dist(rng), dist(rng), dist(rng)}),
        IndexWindow{0, 8});
    REQUIRE(check_preserves_R(t, *a).all_pass());
    CHECK(verify_main_theorem(er, t, 4).all_pass());
  }
}
