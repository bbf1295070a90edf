#include "doctest.h"
#include "helpers.hpp"
#include "twistkit/hopf_envelope.hpp"

using namespace twistkit;
using testutil::free_algebra;
using testutil::quantum_plane;

TEST_CASE("envelope family counts for the quantum plane at K = 1") {
  EndR er(quantum_plane(Field::rationals(), 2));
  EnvelopePresentation env = emit_envelope(er, 1);
  CHECK(env.generators.size() == 8);
  CHECK(env.twisted_per_level == 3);
  CHECK(env.antipode_per_level == 8);
  CHECK(verify_envelope(env, er).all_pass());

  // level-0 pairing on the group-like corner generator
  CHECK(env.text.find("relation (id(x)S)[0](z_1^1): "
                      "z_1^1*S(z_1^1) + z_2^1*S(z_1^2) - 1\n") !=
        std::string::npos);
  // odd level reverses the word order of the relation copies
  CHECK(env.text.find("relation S^1(R)[0]: -2*S(z_1^1)*S(z_2^1) + "
                      "S(z_2^1)*S(z_1^1)\n") != std::string::npos);
}

TEST_CASE("envelope emission is byte-stable") {
  EndR er(quantum_plane(Field::rationals(), 2));
  CHECK(emit_envelope(er, 1).text == emit_envelope(er, 1).text);
  CHECK(emit_envelope(er, 2).text == emit_envelope(er, 2).text);
}

TEST_CASE("group-like generator pairs against its antipode") {
  // end^r of the free line is free on one group-like generator z
  EndR er(free_algebra(Field::rationals(), 1, 2));
  EnvelopePresentation env = emit_envelope(er, 0);
  CHECK(env.generators.size() == 1);
  CHECK(env.twisted_per_level == 0);
  CHECK(env.antipode_per_level == 2);
  CHECK(env.text.find("z_1^1*S(z_1^1) - 1") != std::string::npos);
  CHECK(env.text.find("S(z_1^1)*z_1^1 - 1") != std::string::npos);
  CHECK(verify_envelope(env, er).all_pass());
}
