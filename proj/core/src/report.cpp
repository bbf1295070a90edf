#include "twistkit/report.hpp"

#include <algorithm>
#include <sstream>

namespace twistkit {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    default: return "SKIPPED";
  }
}

void Report::add(std::string name, bool ok, std::string witness) {
  records.push_back({std::move(name),
                     ok ? CheckStatus::Pass : CheckStatus::Fail,
                     ok ? "" : std::move(witness), 0.0});
}

void Report::add_skipped(std::string name, std::string note) {
  records.push_back(
      {std::move(name), CheckStatus::Skipped, std::move(note), 0.0});
}

void Report::merge(const Report& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

bool Report::all_pass() const {
  return std::none_of(records.begin(), records.end(), [](const auto& r) {
    return r.status == CheckStatus::Fail;
  });
}

void Report::sort_canonical() {
  std::stable_sort(records.begin(), records.end(),
                   [](const auto& a, const auto& b) { return a.name < b.name; });
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& r : records) {
    os << "CHECK " << r.name << " " << to_string(r.status);
    if (!r.witness.empty()) os << " witness=" << r.witness;
    os << "\n";
  }
  return os.str();
}

}  // namespace twistkit
