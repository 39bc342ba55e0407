#include "gjms/suite.hpp"

#include <algorithm>
#include <functional>
#include <future>

#include "gjms/compositions.hpp"
#include "gjms/mcal.hpp"
#include "gjms/qcurvature.hpp"
#include "gjms/residue.hpp"

namespace gjms {

namespace {

constexpr std::string_view kSuites[] = {
    "sum_zero",     "strong",        "reversal",     "variation",           "beta_kernel",
    "divergence_cancel", "gjms",     "develop",      "restriction",         "closed_form",
    "partial_sum",  "generating_function", "interpolation", "mystic",       "q_res",
    "q_sphere",     "duality",       "quadratic",    "w_beta",              "pseudo_final",
    "vanishing_critical", "low_order"};

using Task = std::function<VerificationReport()>;

VerificationReport coefficient_suite(CoefficientIdentity kind, int max_order) {
  VerificationReport rep;
  rep.suite = std::string(identity_name(kind));
  rep.space = "all";
  for (int N = 1; N <= max_order; ++N) rep.merge(verify_coefficient_identity(kind, N));
  return rep;
}

template <typename F>
VerificationReport per_order(std::string suite, const ModelSpace& space, int from, int to, F&& f) {
  VerificationReport rep;
  rep.suite = std::move(suite);
  rep.space = std::string(space.name());
  for (int N = from; N <= to; ++N) rep.merge(f(N));
  if (from > to) rep.note(rep.suite + ": skipped (needs max order >= " + std::to_string(from) + ")");
  return rep;
}

QIdentityParams q_params(const RunConfig& c, const ModelSpace& space) {
  QIdentityParams p;
  p.space = space;
  p.max_order = c.max_order;
  p.series_order = c.effective_series_order();
  p.numeric_pairs = c.numeric_pairs;
  p.m4_variant = c.m4_variant;
  return p;
}

void add_tasks(std::string_view suite, const RunConfig& c, std::vector<Task>& tasks) {
  const int N = c.max_order;
  const auto coefficient = [&](CoefficientIdentity kind) {
    tasks.emplace_back([kind, N] { return coefficient_suite(kind, N); });
  };
  if (suite == "sum_zero") return coefficient(CoefficientIdentity::sum_zero);
  if (suite == "strong") return coefficient(CoefficientIdentity::strong);
  if (suite == "reversal") return coefficient(CoefficientIdentity::reversal);
  if (suite == "variation") return coefficient(CoefficientIdentity::variation);
  if (suite == "beta_kernel") return coefficient(CoefficientIdentity::beta_kernel);
  if (suite == "divergence_cancel") return coefficient(CoefficientIdentity::divergence_cancel);

  const auto has = [&](SpaceKind k) {
    return std::any_of(c.spaces.begin(), c.spaces.end(), [k](const auto& s) { return s.kind() == k; });
  };

  if (suite == "restriction") {
    if (!has(SpaceKind::sphere_hyperbolic)) return;
    const auto pairs = c.numeric_pairs;
    tasks.emplace_back([N, pairs] {
      auto rep = per_order("restriction", ModelSpace::sphere_hyperbolic(), 1, N,
                           [](int n) { return verify_restriction(n); });
      for (const auto& [q, p] : pairs) rep.merge(verify_restriction_roots(q, p));
      return rep;
    });
    return;
  }
  if (suite == "partial_sum") {
    if (!has(SpaceKind::sphere)) return;
    tasks.emplace_back([N] {
      return per_order("partial_sum", ModelSpace::sphere(), 2, N, [](int n) {
        VerificationReport r;
        for (int a = 1; a < n; ++a) r.merge(verify_partial_sum(a, n));
        return r;
      });
    });
    return;
  }
  if (suite == "q_res") {
    if (!has(SpaceKind::sphere)) return;
    tasks.emplace_back([N] {
      return per_order("q_res", ModelSpace::sphere(), 1, N, [](int n) { return q_res_sphere(n).second; });
    });
    return;
  }
  if (suite == "q_sphere") {
    if (!has(SpaceKind::sphere)) return;
    const auto params = q_params(c, ModelSpace::sphere());
    tasks.emplace_back([params] { return verify_q_identity(QIdentity::q_sphere, params); });
    return;
  }
  if (suite == "pseudo_final" || suite == "vanishing_critical") {
    if (!has(SpaceKind::pseudo_sphere) && !has(SpaceKind::sphere_hyperbolic)) return;
    const ModelSpace space =
        has(SpaceKind::pseudo_sphere) ? ModelSpace::pseudo_sphere() : ModelSpace::sphere_hyperbolic();
    const auto params = q_params(c, space);
    const QIdentity kind = suite == "pseudo_final" ? QIdentity::pseudo_final : QIdentity::vanishing_critical;
    tasks.emplace_back([params, kind] { return verify_q_identity(kind, params); });
    return;
  }

  for (const auto& space : c.spaces) {
    if (suite == "gjms") {
      tasks.emplace_back([space, N] {
        return per_order("gjms", space, 1, N, [&](int n) { return verify_model_space(space, n); });
      });
    } else if (suite == "develop") {
      if (space.is_product()) continue;
      tasks.emplace_back([space, N] {
        return per_order("develop", space, 1, N, [&](int A) {
          VerificationReport r;
          for (int B = 1; B <= N; ++B) r.merge(verify_expand_product(space, A, B));
          return r;
        });
      });
    } else if (suite == "closed_form") {
      tasks.emplace_back([space, N] {
        return per_order("closed_form", space, 1, N, [&](int n) { return verify_closed_form(space, n); });
      });
    } else if (suite == "generating_function") {
      const int K = c.effective_series_order();
      tasks.emplace_back([space, K] {
        auto rep = verify_generating_function(space, K);
        return rep;
      });
    } else if (suite == "interpolation" || suite == "mystic") {
      const ResidueCheck kind = suite == "mystic" ? ResidueCheck::mystic : ResidueCheck::interpolation;
      tasks.emplace_back([space, N, kind] {
        return per_order(std::string(residue_check_name(kind)), space, 1, N,
                         [&](int n) { return verify_residue_properties(space, n, kind); });
      });
    } else {
      QIdentity kind = QIdentity::duality;
      if (suite == "quadratic") kind = QIdentity::quadratic;
      if (suite == "w_beta") kind = QIdentity::w_beta;
      if (suite == "low_order") kind = QIdentity::low_order;
      const auto params = q_params(c, space);
      tasks.emplace_back([params, kind] { return verify_q_identity(kind, params); });
    }
  }
}

std::vector<std::string_view> selected_suites(const RunConfig& c) {
  std::vector<std::string_view> out;
  const bool all = std::find(c.suites.begin(), c.suites.end(), "all") != c.suites.end();
  for (auto name : kSuites) {
    if (all || std::find(c.suites.begin(), c.suites.end(), name) != c.suites.end()) out.push_back(name);
  }
  return out;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  return std::nullopt;
}

std::size_t RunReport::total() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.total();
  return n;
}

std::size_t RunReport::failed() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.failed_count();
  return n;
}

std::span<const std::string_view> suite_names() { return kSuites; }

void validate(const RunConfig& config) {
  if (config.max_order < 1) throw UsageError("max order must be >= 1");
  if (config.max_order > 16) throw UsageError("max order must be <= 16");
  if (config.series_order != 0 && config.series_order < 2) throw UsageError("series order must be >= 2");
  if (config.spaces.empty()) throw UsageError("no model space selected");
  if (config.suites.empty()) throw UsageError("no suite selected");
  for (const auto& s : config.suites) {
    if (s == "all") continue;
    if (std::find(std::begin(kSuites), std::end(kSuites), s) == std::end(kSuites)) {
      throw UsageError("unknown suite '" + s + "'");
    }
  }
  for (const auto& [q, p] : config.numeric_pairs) {
    if (q < 1 || p < 1) throw UsageError("numeric pairs need q, p >= 1");
  }
}

RunReport run_verification(const RunConfig& config) {
  validate(config);
  std::vector<Task> tasks;
  for (auto suite : selected_suites(config)) add_tasks(suite, config, tasks);

  std::vector<std::future<VerificationReport>> futures;
  futures.reserve(tasks.size());
  for (auto& task : tasks) futures.push_back(std::async(std::launch::async, task));

  RunReport report{config, {}};
  for (auto& f : futures) report.suites.push_back(f.get());
  return report;
}

std::optional<TableKind> parse_table_kind(std::string_view name) {
  if (name == "m_coeff") return TableKind::m_coeff;
  if (name == "q_values") return TableKind::q_values;
  if (name == "operators") return TableKind::operators;
  if (name == "series") return TableKind::series;
  if (name == "defects") return TableKind::defects;
  return std::nullopt;
}

std::optional<SeriesKind> parse_series_kind(std::string_view name) {
  if (name == "v") return SeriesKind::v;
  if (name == "w") return SeriesKind::w;
  if (name == "g") return SeriesKind::g;
  return std::nullopt;
}

}  // namespace gjms
