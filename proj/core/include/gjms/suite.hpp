#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gjms/model_space.hpp"
#include "gjms/report.hpp"

namespace gjms {

/// Invalid configuration supplied by the caller; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { json, csv, text };

std::optional<OutputFormat> parse_format(std::string_view name);

struct RunConfig {
  std::vector<ModelSpace> spaces{ModelSpace::all().begin(), ModelSpace::all().end()};
  int max_order = 6;
  /// 0 selects the default 2 * max_order + 2.
  int series_order = 0;
  std::vector<std::string> suites{"all"};
  std::vector<std::pair<int, int>> numeric_pairs{{1, 1}, {1, 3}, {3, 3}, {3, 5}, {5, 5}};
  bool m4_variant = false;

  int effective_series_order() const { return series_order > 0 ? series_order : 2 * max_order + 2; }
};

struct RunReport {
  RunConfig config;
  std::vector<VerificationReport> suites;

  std::size_t total() const;
  std::size_t failed() const;
  bool passed() const { return failed() == 0; }
};

std::span<const std::string_view> suite_names();
/// Throws UsageError on unknown suites, bad orders or bad pairs.
void validate(const RunConfig& config);
/// Runs every selected suite concurrently; report order follows suite_names() then spaces.
RunReport run_verification(const RunConfig& config);
std::string render_report(const RunReport& report, OutputFormat format);

enum class TableKind { m_coeff, q_values, operators, series, defects };
enum class SeriesKind { v, w, g };

std::optional<TableKind> parse_table_kind(std::string_view name);
std::optional<SeriesKind> parse_series_kind(std::string_view name);

struct TableRequest {
  TableKind kind = TableKind::m_coeff;
  int order = 4;
  std::vector<ModelSpace> spaces{ModelSpace::sphere()};
  unsigned series_order = 10;
  SeriesKind series = SeriesKind::v;
};

std::string emit_table(const TableRequest& request, OutputFormat format);

}  // namespace gjms
