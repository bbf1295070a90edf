#pragma once

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "twistkit/cocycle.hpp"

namespace testutil {

using namespace twistkit;

inline AlgebraPtr quantum_plane(const Field& f, long q) {
  GeneratorSet gens({"x", "y"});
  SparseVec c;
  c.emplace_back(Word::encode({0, 1}, 2), Scalar::one(f));
  c.emplace_back(Word::encode({1, 0}, 2), -Scalar::from_int(f, q));
  return Algebra::make(f, gens, 2, {Tensor::from_sparse(f, 2, std::move(c))});
}

inline AlgebraPtr free_algebra(const Field& f, std::size_t n, std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("g" + std::to_string(i + 1));
  return Algebra::make(f, GeneratorSet(names), m, std::vector<Tensor>{});
}

inline AlgebraPtr cubic_line(const Field& f) {
  GeneratorSet gens({"x"});
  return Algebra::make(f, gens, 3, {Tensor::word(f, 3, 0)});
}

inline Matrix diag(const Field& f, std::vector<long> entries) {
  Matrix m(f, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    m.at(i, i) = Scalar::from_int(f, entries[i]);
  return m;
}

struct CliResult {
  int code = -1;
  std::string out;
};

/// Runs the installed CLI binary with the given arguments, capturing both
/// output streams.
inline CliResult run_cli(const std::string& args) {
  CliResult res;
  std::string cmd = std::string(TWISTKIT_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) res.out.append(buf, got);
  int st = pclose(p);
  res.code = (st >= 0 && WIFEXITED(st)) ? WEXITSTATUS(st) : -1;
  return res;
}

inline std::string data_file(const std::string& name) {
  return std::string(TWISTKIT_TEST_DATA) + "/" + name;
}

}  // namespace testutil
