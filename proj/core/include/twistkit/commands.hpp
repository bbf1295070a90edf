#pragma once

#include "twistkit/parser.hpp"
#include "twistkit/report.hpp"

namespace twistkit {

struct RunOptions {
  std::optional<std::size_t> cap;
  std::optional<IndexWindow> window;
  std::optional<std::uint64_t> seed;
  std::size_t envelope_level = 1;  // emit-envelope only
  bool json = false;
};

struct RunResult {
  Report report;
  std::string output;  // dumps followed by the report (text or JSON)
  int exit_code = 0;   // 0 all pass, 1 any FAIL, 2 usage error
};

/// Commands: hilbert, twist, koszul, bullet, endr, verify-twist,
/// verify-dual, verify-bullet, verify-cocycle, verify-theorem,
/// emit-envelope, verify-all.  A degree-cap overrun aborts the command and
/// surfaces as a failing record in the partial report.
RunResult run(const std::string& command, const Document& doc,
              const RunOptions& opts = {});

}  // namespace twistkit
