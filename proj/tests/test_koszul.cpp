#include "doctest.h"
#include "helpers.hpp"

using namespace twistkit;
using testutil::cubic_line;
using testutil::diag;
using testutil::free_algebra;
using testutil::quantum_plane;

TEST_CASE("dual of the quantum plane is the dual quantum plane") {
  auto a = quantum_plane(Field::rationals(), 2);
  auto dual = koszul_dual(*a);
  CHECK(dual->gens().names() == std::vector<std::string>{"x^", "y^"});
  CHECK(dual->relation_space().dim() == 3);
  // exterior-type growth: 1, 2, 1, 0
  CHECK(dual->hilbert_dims(3) == std::vector<std::size_t>{1, 2, 1, 0});
  // every dual relation annihilates R
  for (const Tensor& f : dual->relation_basis())
    for (const Tensor& r : a->relation_basis())
      CHECK(pairing(f, r).is_zero());
}

TEST_CASE("dual of a free algebra is truncated at degree m") {
  auto a = free_algebra(Field::rationals(), 2, 2);
  auto dual = koszul_dual(*a);
  CHECK(dual->relation_space().dim() == 4);
  CHECK(dual->hilbert_dims(3) == std::vector<std::size_t>{1, 2, 0, 0});
}

TEST_CASE("dual of the cubic line is a free line") {
  auto a = cubic_line(Field::rationals());
  auto dual = koszul_dual(*a);
  CHECK(dual->relation_space().dim() == 0);
  CHECK(dual->hilbert_dims(4) ==
        std::vector<std::size_t>{1, 1, 1, 1, 1});
}

TEST_CASE("dual twisting system is the inverse transpose") {
  Field q = Field::rationals();
  auto a = quantum_plane(q, 2);
  TwistingSystem t = TwistingSystem::one_parameter(
      a->gens(), diag(q, {1, 3}), IndexWindow{0, 6});
  TwistingSystem dual_t = dual_twisting_system(t);
  CHECK(dual_t.one_parameter_form());
  const Matrix& phi = dual_t.parameter_matrix();
  CHECK(phi.at(0, 0).is_one());
  CHECK(phi.at(1, 1) == Scalar::from_fraction(q, 1, 3));
  CHECK(verify_dual_pairing(t, dual_t, 3).all_pass());
}

TEST_CASE("twisting commutes with homogeneous dualization") {
  auto a = quantum_plane(Field::rationals(), 2);
  TwistingSystem t = TwistingSystem::one_parameter(
      a->gens(), diag(a->field(), {1, 3}), IndexWindow{0, 6});
  CHECK(verify_dual_twist_compat(*a, t).all_pass());

  // the identity bit-exactly, spelled out
  auto dual = koszul_dual(*a);
  Subspace lhs = zhang_twist(*dual, dual_twisting_system(t))
                     .presentation->relation_space();
  Subspace rhs =
      zhang_twist(*a, t).presentation->relation_space().annihilator();
  CHECK(lhs == rhs);
}

TEST_CASE("dual twist on the cubic line with tau_i(x) = 2^i x") {
  auto a = cubic_line(Field::rationals());
  TwistingSystem t = TwistingSystem::one_parameter(
      a->gens(), diag(a->field(), {2}), IndexWindow{0, 8});
  CHECK(verify_dual_pairing(t, dual_twisting_system(t), 5).all_pass());
  CHECK(verify_dual_twist_compat(*a, t).all_pass());
}
