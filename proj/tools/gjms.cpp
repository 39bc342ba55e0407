#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "gjms/suite.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<gjms::ModelSpace> parse_spaces(const std::string& text) {
  if (text == "all") return {gjms::ModelSpace::all().begin(), gjms::ModelSpace::all().end()};
  std::vector<gjms::ModelSpace> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find(',', start);
    const std::string name = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    auto space = gjms::ModelSpace::parse(name);
    if (!space) throw gjms::UsageError("unknown space '" + name + "'");
    out.push_back(*space);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::pair<int, int>> parse_pairs(const std::vector<std::string>& items) {
  std::vector<std::pair<int, int>> out;
  for (const auto& item : items) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw gjms::UsageError("expected q:p, got '" + item + "'");
    try {
      std::size_t used_q = 0;
      std::size_t used_p = 0;
      const int q = std::stoi(item.substr(0, colon), &used_q);
      const int p = std::stoi(item.substr(colon + 1), &used_p);
      if (used_q != colon || used_p != item.size() - colon - 1) throw std::invalid_argument(item);
      out.emplace_back(q, p);
    } catch (const std::logic_error&) {
      throw gjms::UsageError("expected q:p, got '" + item + "'");
    }
  }
  return out;
}

gjms::OutputFormat format_of(const std::string& name) {
  auto f = gjms::parse_format(name);
  if (!f) throw gjms::UsageError("unknown format '" + name + "'");
  return *f;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw gjms::UsageError("cannot open '" + path + "' for writing");
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of GJMS operator and Q-curvature identities on model spaces"};
  app.require_subcommand(1);

  std::string spaces = "all";
  int max_order = 6;
  int series_order = 0;
  std::vector<std::string> suites{"all"};
  std::string format = "text";
  std::string out_path;
  std::vector<std::string> pairs;
  bool m4_variant = false;

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--space", spaces, "Comma-separated spaces or 'all'")->capture_default_str();
  verify->add_option("--max-order", max_order, "Largest order N")->capture_default_str();
  verify->add_option("--series-order", series_order, "Series truncation K (default 2N+2)");
  verify->add_option("--suite", suites, "Suites to run, or 'all'")->delimiter(',')->capture_default_str();
  verify->add_option("--format", format, "json, csv or text")->capture_default_str();
  verify->add_option("--out", out_path, "Output file (default stdout)");
  verify->add_option("--numeric-qp", pairs, "Odd q:p pairs, comma separated")->delimiter(',');
  verify->add_flag("--enable-m4-variant", m4_variant, "Assert the -4|P|^2 variant of Q_4");
  verify->add_flag_callback("--list-suites", [] {
    for (auto s : gjms::suite_names()) std::cout << s << '\n';
    throw CLI::Success();
  }, "List suite names");

  std::string kind;
  int order = 4;
  std::string table_space = "sphere";
  std::string series = "v";
  unsigned table_series_order = 10;
  std::string table_format = "text";
  std::string table_out;
  auto* table = app.add_subcommand("table", "Emit a table");
  table->add_option("kind", kind, "m_coeff, q_values, operators, series or defects")->required();
  table->add_option("--order", order, "Order N")->capture_default_str();
  table->add_option("--space", table_space, "Comma-separated spaces or 'all'")->capture_default_str();
  table->add_option("--series", series, "v, w or g")->capture_default_str();
  table->add_option("--series-order", table_series_order, "Series truncation K")->capture_default_str();
  table->add_option("--format", table_format, "json, csv or text")->capture_default_str();
  table->add_option("--out", table_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success&) {
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      gjms::RunConfig config;
      config.spaces = parse_spaces(spaces);
      config.max_order = max_order;
      config.series_order = series_order;
      config.suites = suites;
      if (!pairs.empty()) config.numeric_pairs = parse_pairs(pairs);
      config.m4_variant = m4_variant;
      const auto fmt = format_of(format);
      gjms::validate(config);
      const auto report = gjms::run_verification(config);
      write_output(gjms::render_report(report, fmt), out_path);
      return report.passed() ? kExitPass : kExitFail;
    }
    gjms::TableRequest req;
    const auto table_kind = gjms::parse_table_kind(kind);
    if (!table_kind) throw gjms::UsageError("unknown table kind '" + kind + "'");
    const auto series_kind = gjms::parse_series_kind(series);
    if (!series_kind) throw gjms::UsageError("unknown series '" + series + "'");
    req.kind = *table_kind;
    req.order = order;
    req.spaces = parse_spaces(table_space);
    req.series = *series_kind;
    req.series_order = table_series_order;
    write_output(gjms::emit_table(req, format_of(table_format)), table_out);
    return kExitPass;
  } catch (const gjms::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
