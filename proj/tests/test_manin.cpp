#include "doctest.h"
#include "helpers.hpp"

using namespace twistkit;
using testutil::diag;
using testutil::quantum_plane;

TEST_CASE("bullet product of the quantum plane with its dual") {
  auto a = quantum_plane(Field::rationals(), 2);
  auto dual = koszul_dual(*a);
  auto e = bullet(*a, *dual);
  CHECK(e->gens().dimension() == 4);
  // dim Sh(R (x) R^perp) = 1 * 3 inside the 16-dimensional pair word space
  CHECK(e->relation_space().dim() == 3);
  CHECK(e->relation_space().ambient_dim() == 16);
  CHECK(e->hilbert_dims(3) == std::vector<std::size_t>{1, 4, 13, 40});
}

TEST_CASE("bullet requires matching homogeneity degrees") {
  auto a = quantum_plane(Field::rationals(), 2);
  auto c = testutil::cubic_line(Field::rationals());
  CHECK_THROWS(bullet(*a, *c));
}

TEST_CASE("matrix coalgebra structure on the generators") {
  EndR er(quantum_plane(Field::rationals(), 2));
  const Algebra& e = er.bialgebra();
  CHECK(e.gens().name(er.z_letter(0, 0)) == "z_1^1");
  CHECK(e.gens().name(er.z_letter(1, 0)) == "z_2^1");

  // Delta(z_2^1) = z_1^1 (x) z_2^1 + z_2^1 (x) z_2^2
  Element z21 = e.basis_element(1, er.z_letter(1, 0));
  TensorSquare d = er.comultiply(z21);
  PairedCoords expect;
  expect[{er.z_letter(0, 0), er.z_letter(1, 0)}] = Scalar::one(e.field());
  expect[{er.z_letter(1, 0), er.z_letter(1, 1)}] = Scalar::one(e.field());
  CHECK(d.coords == expect);

  CHECK(er.counit(e.basis_element(1, er.z_letter(0, 0))).is_one());
  CHECK(er.counit(z21).is_zero());
}

TEST_CASE("coaction on the base algebra generators") {
  EndR er(quantum_plane(Field::rationals(), 2));
  // rho(x) = x (x) z_1^1 + y (x) z_1^2
  Element x = er.base().basis_element(1, 0);
  TensorSquare r = er.coact(x);
  PairedCoords expect;
  expect[{0, er.z_letter(0, 0)}] = Scalar::one(er.base().field());
  expect[{1, er.z_letter(0, 1)}] = Scalar::one(er.base().field());
  CHECK(r.coords == expect);
}

TEST_CASE("bialgebra laws hold to degree 3") {
  EndR er(quantum_plane(Field::rationals(), 2));
  CHECK(er.verify_bialgebra(3).all_pass());
}

TEST_CASE("bullet twist is the Kronecker product and stays one-parameter") {
  Field q = Field::rationals();
  auto a = quantum_plane(q, 2);
  TwistingSystem t = TwistingSystem::one_parameter(
      a->gens(), diag(q, {1, 3}), IndexWindow{0, 6});
  TwistingSystem bt = bullet_twist(t, dual_twisting_system(t));
  CHECK(bt.one_parameter_form());
  const Matrix& phi = bt.parameter_matrix();
  CHECK(phi.at(0, 0).is_one());
  CHECK(phi.at(1, 1) == Scalar::from_fraction(q, 1, 3));
  CHECK(phi.at(2, 2) == Scalar::from_int(q, 3));
  CHECK(phi.at(3, 3).is_one());
}

TEST_CASE("bullet twist compatibility on the quantum plane") {
  auto a = quantum_plane(Field::rationals(), 2);
  auto dual = koszul_dual(*a);
  TwistingSystem t = TwistingSystem::one_parameter(
      a->gens(), diag(a->field(), {1, 3}), IndexWindow{0, 6});
  CHECK(verify_bullet_twist_compat(*a, *dual, t, dual_twisting_system(t), 3)
            .all_pass());
}

TEST_CASE("identity twists are trivially compatible") {
  auto a = quantum_plane(Field::rationals(), 2);
  auto dual = koszul_dual(*a);
  TwistingSystem ida =
      TwistingSystem::identity(a->field(), a->gens(), IndexWindow{0, 6});
  TwistingSystem idb =
      TwistingSystem::identity(a->field(), dual->gens(), IndexWindow{0, 6});
  CHECK(verify_bullet_twist_compat(*a, *dual, ida, idb, 3).all_pass());
}
