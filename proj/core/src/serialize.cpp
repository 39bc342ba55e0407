#include <json.hpp>

#include <sstream>

#include "gjms/compositions.hpp"
#include "gjms/mcal.hpp"
#include "gjms/qcurvature.hpp"
#include "gjms/suite.hpp"

namespace gjms {

namespace {

using nlohmann::ordered_json;

constexpr int kSchema = 1;

ordered_json poly_json(const MultiPoly& f) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : f.terms()) {
    ordered_json mono = ordered_json::object();
    for (Var v : all_vars()) {
      if (m.exponent(v) > 0) mono[std::string(var_name(v))] = m.exponent(v);
    }
    terms.push_back({{"coefficient", c.str()}, {"monomial", mono}});
  }
  return {{"string", f.str()}, {"terms", terms}};
}

std::string csv_field(const std::string& s) {
  const bool quote = s.find_first_of(",\"\n ()") != std::string::npos;
  if (!quote) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> space_names(const std::vector<ModelSpace>& spaces) {
  std::vector<std::string> out;
  for (const auto& s : spaces) out.emplace_back(s.name());
  return out;
}

ordered_json config_json(const RunConfig& c) {
  ordered_json pairs = ordered_json::array();
  for (const auto& [q, p] : c.numeric_pairs) pairs.push_back({q, p});
  return {{"spaces", space_names(c.spaces)},
          {"max_order", c.max_order},
          {"series_order", c.effective_series_order()},
          {"suites", c.suites},
          {"numeric_qp", pairs},
          {"m4_variant", c.m4_variant}};
}

std::string config_line(const RunConfig& c) {
  std::vector<std::string> pairs;
  for (const auto& [q, p] : c.numeric_pairs) pairs.push_back(std::to_string(q) + ":" + std::to_string(p));
  return "spaces=" + join(space_names(c.spaces), ",") + " max_order=" + std::to_string(c.max_order) +
         " series_order=" + std::to_string(c.effective_series_order()) +
         " suites=" + join(c.suites, ",") + " numeric_qp=" + join(pairs, ",") +
         " m4_variant=" + (c.m4_variant ? "true" : "false");
}

std::string status(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

std::string render_report(const RunReport& report, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::json: {
      ordered_json suites = ordered_json::array();
      for (const auto& s : report.suites) {
        ordered_json entries = ordered_json::array();
        for (const auto& e : s.entries) {
          ordered_json entry = {{"identity", e.identity},
                                {"reference", e.reference},
                                {"params", e.params},
                                {"status", status(e.passed)}};
          if (!e.passed) entry["witness"] = e.witness;
          entries.push_back(std::move(entry));
        }
        suites.push_back({{"suite", s.suite},
                          {"space", s.space},
                          {"status", status(s.passed())},
                          {"summary", {{"total", s.total()}, {"passed", s.passed_count()}, {"failed", s.failed_count()}}},
                          {"entries", entries},
                          {"notes", s.notes}});
      }
      ordered_json doc = {{"schema", kSchema},
                          {"convention", kSignConvention},
                          {"config", config_json(report.config)},
                          {"status", status(report.passed())},
                          {"summary",
                           {{"total", report.total()},
                            {"passed", report.total() - report.failed()},
                            {"failed", report.failed()}}},
                          {"suites", suites}};
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      out << "# convention: " << kSignConvention << '\n';
      out << "# config: " << config_line(report.config) << '\n';
      out << "suite,space,identity,reference,params,status,witness\n";
      for (const auto& s : report.suites) {
        for (const auto& e : s.entries) {
          out << csv_field(s.suite) << ',' << csv_field(s.space) << ',' << csv_field(e.identity) << ','
              << csv_field(e.reference) << ',' << csv_field(e.params) << ',' << status(e.passed) << ','
              << csv_field(e.witness) << '\n';
        }
      }
      break;
    }
    case OutputFormat::text: {
      out << "convention: " << kSignConvention << '\n';
      out << "config: " << config_line(report.config) << '\n';
      for (const auto& s : report.suites) {
        out << (s.passed() ? "[PASS] " : "[FAIL] ") << s.suite << " (" << s.space << ") "
            << s.passed_count() << '/' << s.total() << '\n';
        for (const auto& e : s.entries) {
          if (!e.passed) out << "  fail " << e.identity << " " << e.params << ": " << e.witness << '\n';
        }
        for (const auto& n : s.notes) out << "  note " << n << '\n';
      }
      out << "summary: " << (report.total() - report.failed()) << '/' << report.total() << " passed, "
          << report.failed() << " failed\n";
      break;
    }
  }
  return out.str();
}

namespace {

struct Row {
  std::string space;
  int index = 0;
  std::vector<std::pair<std::string, MultiPoly>> values;
};

std::string table_name(TableKind k) {
  switch (k) {
    case TableKind::m_coeff: return "m_coeff";
    case TableKind::q_values: return "q_values";
    case TableKind::operators: return "operators";
    case TableKind::series: return "series";
    case TableKind::defects: return "defects";
  }
  return "unknown";
}

std::string series_name(SeriesKind k) {
  switch (k) {
    case SeriesKind::v: return "v";
    case SeriesKind::w: return "w";
    case SeriesKind::g: return "g";
  }
  return "?";
}

std::vector<Row> build_rows(const TableRequest& req) {
  std::vector<Row> rows;
  for (const auto& space : req.spaces) {
    const std::string name(space.name());
    switch (req.kind) {
      case TableKind::q_values:
        for (int N = 1; N <= req.order; ++N) rows.push_back({name, N, {{"Q", q_value(space, N)}}});
        break;
      case TableKind::operators:
        for (int N = 1; N <= req.order; ++N) {
          rows.push_back({name, N, {{"P", gjms_poly(space, N)}, {"M", build_M(space, N).m_operator}}});
        }
        break;
      case TableKind::defects:
        for (int N = 1; N <= req.order; ++N) {
          const QDefect d = lambda_defect(space, N);
          rows.push_back({name, N, {{"Q_primary", d.q_primary}, {"Lambda", d.lambda}}});
        }
        break;
      case TableKind::series: {
        TruncSeries s;
        if (req.series == SeriesKind::g) {
          s = g_series(space, req.series_order);
        } else {
          const VolumeSeries vs = volume_series(space, req.series_order);
          s = req.series == SeriesKind::v ? vs.v : vs.w;
        }
        for (unsigned i = 0; i <= s.order(); ++i) {
          rows.push_back({name, static_cast<int>(i), {{series_name(req.series), s[i]}}});
        }
        break;
      }
      case TableKind::m_coeff: break;
    }
  }
  return rows;
}

std::string index_header(TableKind k) { return k == TableKind::series ? "power" : "N"; }

}  // namespace

std::string emit_table(const TableRequest& req, OutputFormat format) {
  if (req.order < 1) throw UsageError("table order must be >= 1");
  if (req.kind == TableKind::series && req.series_order < 1) throw UsageError("series order must be >= 1");
  if (req.kind == TableKind::series && req.series != SeriesKind::g && req.series_order < 2) {
    throw UsageError("series order must be >= 2 for v and w");
  }
  std::ostringstream out;

  if (req.kind == TableKind::m_coeff) {
    const CoefficientTable table = coefficient_table(req.order);
    switch (format) {
      case OutputFormat::json: {
        ordered_json entries = ordered_json::array();
        for (const auto& [I, m] : table.entries) {
          entries.push_back({{"composition", std::vector<int>(I.parts().begin(), I.parts().end())},
                             {"label", I.str()},
                             {"m", m.str()}});
        }
        ordered_json doc = {{"schema", kSchema},      {"kind", "m_coeff"},
                            {"order", req.order},     {"all_integral", table.all_integral()},
                            {"entries", entries}};
        out << doc.dump(2) << '\n';
        break;
      }
      case OutputFormat::csv:
        out << "composition,m\n";
        for (const auto& [I, m] : table.entries) out << '"' << I.str() << "\"," << m.str() << '\n';
        break;
      case OutputFormat::text:
        for (const auto& [I, m] : table.entries) out << I.str() << "  " << m.str() << '\n';
        break;
    }
    return out.str();
  }

  const auto rows = build_rows(req);
  const std::string idx = index_header(req.kind);
  switch (format) {
    case OutputFormat::json: {
      ordered_json entries = ordered_json::array();
      for (const auto& r : rows) {
        ordered_json e = {{"space", r.space}, {idx, r.index}};
        for (const auto& [k, v] : r.values) e[k] = poly_json(v);
        entries.push_back(std::move(e));
      }
      ordered_json doc = {{"schema", kSchema}, {"kind", table_name(req.kind)}, {"convention", kSignConvention}};
      if (req.kind == TableKind::series) {
        doc["series"] = series_name(req.series);
        doc["series_order"] = req.series_order;
      } else {
        doc["order"] = req.order;
      }
      doc["entries"] = entries;
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      out << "space," << idx;
      if (!rows.empty()) {
        for (const auto& [k, v] : rows.front().values) out << ',' << k;
      }
      out << '\n';
      for (const auto& r : rows) {
        out << r.space << ',' << r.index;
        for (const auto& [k, v] : r.values) out << ',' << csv_field(v.str());
        out << '\n';
      }
      break;
    }
    case OutputFormat::text:
      for (const auto& r : rows) {
        out << r.space << ' ' << idx << '=' << r.index;
        for (const auto& [k, v] : r.values) out << "  " << k << " = " << v.str();
        out << '\n';
      }
      break;
  }
  return out.str();
}

}  // namespace gjms
