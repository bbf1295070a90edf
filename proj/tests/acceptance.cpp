// Acceptance gate: one line per criterion, driven through the CLI binary
// plus a few library-level golden values.
#include <cstdio>
#include <string>

#include "helpers.hpp"
#include "twistkit/hopf_envelope.hpp"

using testutil::data_file;
using testutil::run_cli;
using namespace twistkit;

namespace {

int failures = 0;

void criterion(int n, bool ok, const std::string& what) {
  std::printf("CRITERION %d %s %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) ++failures;
}

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::size_t count_lines(const std::string& hay, const std::string& prefix) {
  std::size_t n = 0, pos = 0;
  while ((pos = hay.find(prefix, pos)) != std::string::npos) {
    ++n;
    pos += prefix.size();
  }
  return n;
}

}  // namespace

int main() {
  // 1: twisted relation spaces, bit-exact
  {
    auto comm = run_cli("twist " + data_file("commutative_plane.alg"));
    auto qp = run_cli("twist " + data_file("quantum_plane.alg"));
    criterion(1,
              comm.code == 0 && has(comm.out, ": x*y - 3*y*x") &&
                  qp.code == 0 && has(qp.out, ": x*y - 6*y*x"),
              "diagonal Zhang twist emits the expected relation spaces");
  }

  // 2: axiom suite to degree 5 plus the failing mutant
  {
    auto good = run_cli("verify-twist " + data_file("quantum_plane.alg"));
    auto bad = run_cli("verify-twist " + data_file("swap_mutant.alg"));
    criterion(2,
              good.code == 0 && has(good.out, "t.axiom(4) PASS") &&
                  bad.code == 1 && has(bad.out, "FAIL witness="),
              "twisting-system axioms pass; swap mutant fails with witness");
  }

  // 3: duality compatibility for the quantum plane and the cubic line
  {
    auto qp = run_cli("verify-dual " + data_file("quantum_plane.alg"));
    auto cu = run_cli("verify-dual " + data_file("cubic.alg"));
    criterion(3,
              qp.code == 0 && cu.code == 0 &&
                  has(qp.out, "t.twist-dual-commute PASS") &&
                  has(qp.out, "t.dual-hilbert PASS") &&
                  has(cu.out, "t.twist-dual-commute PASS"),
              "twisting commutes with dualization to degree 5");
  }

  // 4: bullet twist compatibility plus 20 randomized diagonal twists
  {
    auto qp = run_cli("verify-bullet " + data_file("quantum_plane.alg"));
    auto rnd = run_cli("verify-bullet " + data_file("quantum_plane_f7.alg"));
    criterion(4,
              qp.code == 0 && rnd.code == 0 &&
                  has(rnd.out, "random-twists-found PASS") &&
                  has(rnd.out, "rand19.bullet-twist-relations PASS"),
              "bullet twist compatibility, exact and randomized over F_7");
  }

  // 5: bialgebra laws on end^r(quantum plane) with the golden dimension
  {
    auto dump = run_cli("endr " + data_file("quantum_plane.alg"));
    EndR er(testutil::quantum_plane(Field::rationals(), 2));
    criterion(5,
              dump.code == 0 && has(dump.out, "coassoc[n=3] PASS") &&
                  er.bialgebra().dim(3) == 40,
              "bialgebra sanity to degree 3; dim end^r(A)_3 = 40");
  }

  // 6: cocycle suite on end^r(quantum plane)
  {
    auto res =
        run_cli("verify-cocycle " + data_file("quantum_plane.alg") +
                " --cap 4");
    criterion(6,
              res.code == 0 && has(res.out, "t.cocycle-axiom PASS") &&
                  has(res.out, "t.cocycle-unital PASS") &&
                  has(res.out, "t.cocycle-convolution-inverse PASS") &&
                  has(res.out, "t.cocycle-product-is-composed-twist PASS"),
              "2-cocycle axiom, unitality, inverse, composed-twist identity");
  }

  // 7 + 8: main theorem on four examples, with degree-one recovery
  {
    auto qp = run_cli("verify-theorem " + data_file("quantum_plane.alg") +
                      " --cap 4");
    auto comm = run_cli("verify-theorem " +
                        data_file("commutative_plane.alg") + " --cap 4");
    auto cu = run_cli("verify-theorem " + data_file("cubic.alg") + " --cap 4");
    auto sk = run_cli("verify-theorem " + data_file("skew3_f11.alg"));
    bool all_pass = qp.code == 0 && comm.code == 0 && cu.code == 0 &&
                    sk.code == 0 &&
                    has(sk.out, "rand9.theorem-sigma-equals-tau-product PASS");
    criterion(7, all_pass,
              "a ._sigma b = a ._tau b on all pairs to total degree 4");
    const std::string rt = "cocycle-roundtrip-degree-one PASS";
    criterion(8,
              has(qp.out, rt) && has(comm.out, rt) && has(cu.out, rt) &&
                  has(sk.out, rt),
              "functionals recover the degree-one twist matrices exactly");
  }

  // 9: winding and functional roundtrips, exhaustive to degree 3
  {
    auto res = run_cli("verify-cocycle " + data_file("quantum_plane.alg") +
                       " --cap 3");
    criterion(9,
              res.code == 0 && has(res.out, "t.winding-right-is-tau PASS") &&
                  has(res.out, "t.winding-left-is-mu PASS") &&
                  has(res.out, "t.winding-inverse PASS") &&
                  has(res.out, "t.extension-kills-relations PASS") &&
                  has(res.out, "t.functional-conditions-equivalent PASS"),
              "winding and inductive-extension roundtrips to degree 3");
  }

  // 10: byte-stable envelope dump with the derived family counts
  {
    std::string cmd =
        "emit-envelope " + data_file("quantum_plane.alg") + " --level 1";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    bool counts = count_lines(a.out, "relation S^0(R)[") == 3 &&
                  count_lines(a.out, "relation S^1(R)[") == 3 &&
                  count_lines(a.out, "relation (id(x)S)[0]") == 4 &&
                  count_lines(a.out, "relation (S(x)id)[0]") == 4 &&
                  count_lines(a.out, "relation (id(x)S)[1]") == 4 &&
                  count_lines(a.out, "relation (S(x)id)[1]") == 4;
    criterion(10, a.code == 0 && a.out == b.out && counts,
              "envelope dump is byte-stable with 3 + 8 relations per level");
  }

  return failures == 0 ? 0 : 1;
}
