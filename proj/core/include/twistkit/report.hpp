#pragma once

#include <string>
#include <vector>

namespace twistkit {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // compact term on failure, or range note on skip
  double ms = 0.0;
};

/// Ordered list of verification records with a stable machine-readable
/// text form: one `CHECK <name> <PASS|FAIL|SKIPPED> [witness=...]` line
/// per record, sorted canonically by check name.
struct Report {
  std::vector<CheckRecord> records;

  void add(std::string name, bool ok, std::string witness = "");
  void add_skipped(std::string name, std::string note);
  void merge(const Report& other);
  bool all_pass() const;
  void sort_canonical();
  std::string to_text() const;
};

const char* to_string(CheckStatus s);

}  // namespace twistkit
