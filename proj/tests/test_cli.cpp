#include "doctest.h"
#include "helpers.hpp"

using testutil::data_file;
using testutil::run_cli;

TEST_CASE("hilbert command prints dimension rows") {
  auto res = run_cli("hilbert " + data_file("quantum_plane.alg") + " --cap 3");
  CHECK(res.code == 0);
  CHECK(res.out.find("1 2 3 4") != std::string::npos);
}

TEST_CASE("twist command emits the twisted relation") {
  auto res = run_cli("twist " + data_file("quantum_plane.alg"));
  CHECK(res.code == 0);
  CHECK(res.out.find("x*y - 6*y*x") != std::string::npos);
}

TEST_CASE("failing verification exits 1 with a witness") {
  auto res = run_cli("verify-twist " + data_file("swap_mutant.alg"));
  CHECK(res.code == 1);
  CHECK(res.out.find("FAIL") != std::string::npos);
  CHECK(res.out.find("witness=") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("frobnicate " + data_file("quantum_plane.alg")).code == 2);
  CHECK(run_cli("hilbert /nonexistent.alg").code == 2);
  CHECK(run_cli("hilbert").code == 2);
}

TEST_CASE("parse errors exit 2 with a location") {
  auto res = run_cli("hilbert " + data_file("quantum_plane.alg") +
                     " --cap 0x");
  CHECK(res.code == 2);
}

TEST_CASE("json reports carry the same records") {
  auto res = run_cli("verify-twist " + data_file("quantum_plane.alg") +
                     " --cap 3 --json");
  CHECK(res.code == 0);
  CHECK(res.out.find("\"all_pass\": true") != std::string::npos);
  CHECK(res.out.find("\"name\": \"t.axiom(1)\"") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  std::string cmd = "verify-bullet " + data_file("quantum_plane_f7.alg");
  auto a = run_cli(cmd);
  auto b = run_cli(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
