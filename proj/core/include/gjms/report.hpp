#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gjms/poly.hpp"

namespace gjms {

/// Sign convention shared by every report.
inline constexpr const char* kSignConvention =
    "delta d = -Delta with -Delta non-negative; the symbol x stands for Delta";

struct ReportEntry {
  std::string identity;
  std::string reference;
  std::string params;
  bool passed = false;
  std::string witness;
};

struct VerificationReport {
  std::string suite;
  std::string space;
  std::vector<ReportEntry> entries;
  std::vector<std::string> notes;

  std::size_t total() const { return entries.size(); }
  std::size_t passed_count() const;
  std::size_t failed_count() const { return total() - passed_count(); }
  bool passed() const { return failed_count() == 0; }

  void add(ReportEntry entry) { entries.push_back(std::move(entry)); }
  void note(std::string text) { notes.push_back(std::move(text)); }
  void merge(const VerificationReport& other);

  /// Records lhs == rhs; the witness is the non-zero difference.
  bool expect_equal(const std::string& identity, const std::string& reference,
                    const std::string& params, const MultiPoly& lhs, const MultiPoly& rhs);
  bool expect_true(const std::string& identity, const std::string& reference,
                   const std::string& params, bool ok, const std::string& witness);
};

}  // namespace gjms
