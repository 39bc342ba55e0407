#include "gjms/report.hpp"

#include <algorithm>

namespace gjms {

std::size_t VerificationReport::passed_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.passed; }));
}

void VerificationReport::merge(const VerificationReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

bool VerificationReport::expect_equal(const std::string& identity, const std::string& reference,
                                      const std::string& params, const MultiPoly& lhs,
                                      const MultiPoly& rhs) {
  const MultiPoly diff = lhs - rhs;
  const bool ok = diff.is_zero();
  entries.push_back({identity, reference, params, ok, ok ? std::string() : "lhs - rhs = " + diff.str()});
  return ok;
}

bool VerificationReport::expect_true(const std::string& identity, const std::string& reference,
                                     const std::string& params, bool ok,
                                     const std::string& witness) {
  entries.push_back({identity, reference, params, ok, ok ? std::string() : witness});
  return ok;
}

}  // namespace gjms
