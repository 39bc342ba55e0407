#include "gjms/model_space.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace gjms {

namespace {

constexpr std::array<Var, 1> kScalarOps = {Var::x};
constexpr std::array<Var, 2> kProductOps = {Var::b2, Var::c2};

const std::array<ModelSpace, 4>& space_list() {
  static const std::array<ModelSpace, 4> spaces = {
      ModelSpace::sphere(), ModelSpace::einstein(), ModelSpace::pseudo_sphere(),
      ModelSpace::sphere_hyperbolic()};
  return spaces;
}

MultiPoly rat(std::int64_t a, std::int64_t b = 1) { return MultiPoly(ExactRational(a, b)); }

MultiPoly nu() { return var(Var::nu); }
MultiPoly half_q() { return var(Var::q) * rat(1, 2); }
MultiPoly half_p() { return var(Var::p) * rat(1, 2); }

// ((s-1)/2)^2
MultiPoly shifted_square(Var s) {
  const MultiPoly h = (var(s) - MultiPoly(1)) * rat(1, 2);
  return h * h;
}

std::string order_param(int N) { return "N=" + std::to_string(N); }

void require_order(int N, const char* what) {
  if (N < 1) throw std::invalid_argument(std::string(what) + ": order must be >= 1");
}

}  // namespace

std::optional<ModelSpace> ModelSpace::parse(std::string_view name) {
  for (const auto& s : space_list()) {
    if (s.name() == name) return s;
  }
  return std::nullopt;
}

std::span<const ModelSpace> ModelSpace::all() { return space_list(); }

std::string_view ModelSpace::name() const {
  switch (kind_) {
    case SpaceKind::sphere: return "sphere";
    case SpaceKind::einstein: return "einstein";
    case SpaceKind::pseudo_sphere: return "pseudosphere";
    case SpaceKind::sphere_hyperbolic: return "sphere-hyperbolic";
  }
  return "unknown";
}

std::span<const Var> ModelSpace::operator_vars() const {
  if (is_product()) return kProductOps;
  return kScalarOps;
}

MultiPoly ModelSpace::half_dimension() const {
  if (is_product()) return half_q() + half_p();
  return nu();
}

std::vector<Substitution> ModelSpace::constant_rules() const {
  if (is_product()) return {{Var::b2, shifted_square(Var::q)}, {Var::c2, shifted_square(Var::p)}};
  return {{Var::x, MultiPoly()}};
}

std::vector<std::pair<MultiPoly, MultiPoly>> ModelSpace::schouten_spectrum() const {
  switch (kind_) {
    case SpaceKind::sphere: return {{rat(1, 2), nu() * rat(2)}};
    case SpaceKind::einstein: return {{var(Var::c) * rat(1, 2), nu() * rat(2)}};
    case SpaceKind::pseudo_sphere:
    case SpaceKind::sphere_hyperbolic:
      return {{rat(1, 2), var(Var::q)}, {rat(-1, 2), var(Var::p)}};
  }
  return {};
}

MultiPoly gjms_poly(const ModelSpace& space, int N) {
  require_order(N, "gjms");
  MultiPoly out(1);
  if (!space.is_product()) {
    const MultiPoly scale = space.kind() == SpaceKind::einstein ? var(Var::c) : MultiPoly(1);
    for (int i = 0; i < N; ++i) {
      out *= var(Var::x) - (nu() + MultiPoly(i)) * (nu() - MultiPoly(1 + i)) * scale;
    }
    return out;
  }
  const MultiPoly b2 = var(Var::b2);
  const MultiPoly c2 = var(Var::c2);
  const MultiPoly diff_sq = (b2 - c2) * (b2 - c2);
  const int M = N / 2;
  const int shift = N % 2;  // odd members use even nodes 2j
  if (shift == 1) out = c2 - b2;
  for (int j = 1; j <= M; ++j) {
    const std::int64_t k = 2 * j - 1 + shift;
    out *= diff_sq - MultiPoly(2 * k * k) * (b2 + c2) + MultiPoly(k * k * k * k);
  }
  return out;
}

OperatorElem gjms(const ModelSpace& space, int N) { return {space, gjms_poly(space, N)}; }

std::vector<MultiPoly> gjms_table(const ModelSpace& space, int N) {
  std::vector<MultiPoly> out{MultiPoly(1)};
  for (int k = 1; k <= N; ++k) out.push_back(gjms_poly(space, k));
  return out;
}

MultiPoly q_value(const ModelSpace& space, int N) {
  require_order(N, "q_value");
  MultiPoly out(1);
  if (!space.is_product()) {
    out = nu();
    for (int j = 1; j < N; ++j) out *= (nu() - MultiPoly(j)) * (nu() + MultiPoly(j));
    if (space.kind() == SpaceKind::einstein) out *= var(Var::c).pow(static_cast<unsigned>(N));
    return out;
  }
  const MultiPoly sum = half_q() + half_p();
  const MultiPoly diff = half_q() - half_p();
  for (int j = 1; j < N; ++j) out *= sum + MultiPoly(N - 2 * j);
  for (int j = 0; j < N; ++j) out *= diff - MultiPoly(N - 1 - 2 * j);
  return out;
}

MultiPoly apply_to_constant(const ModelSpace& space, const MultiPoly& op) {
  return substitute(op, space.constant_rules());
}

MultiPoly schouten_power_sum(const ModelSpace& space, int k) {
  MultiPoly out;
  for (const auto& [value, mult] : space.schouten_spectrum()) {
    out += mult * value.pow(static_cast<unsigned>(k));
  }
  return out;
}

std::vector<MultiPoly> schouten_elementary(const ModelSpace& space, int k_max) {
  // Newton: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
  std::vector<MultiPoly> power(static_cast<std::size_t>(k_max) + 1);
  for (int i = 1; i <= k_max; ++i) power[static_cast<std::size_t>(i)] = schouten_power_sum(space, i);
  std::vector<MultiPoly> e{MultiPoly(1)};
  for (int k = 1; k <= k_max; ++k) {
    MultiPoly acc;
    for (int i = 1; i <= k; ++i) {
      acc += sign_power(i - 1) * e[static_cast<std::size_t>(k - i)] * power[static_cast<std::size_t>(i)];
    }
    e.push_back(acc / ExactRational(k));
  }
  return e;
}

std::vector<ProductTerm> expand_product(const ModelSpace& space, int A, int B) {
  if (space.is_product()) {
    throw std::invalid_argument("expand_product: defined for sphere and einstein only");
  }
  if (A < 0 || B < 0) throw std::invalid_argument("expand_product: negative order");
  std::vector<ProductTerm> out;
  const int top = std::min(A, B);
  for (int j = 0; j <= top; ++j) {
    ExactRational coeff = sign_power(j) * factorial(A) * factorial(B) * factorial(A + B) /
                          (factorial(j) * factorial(A - j) * factorial(B - j) * factorial(A + B - j));
    const unsigned c_power = space.kind() == SpaceKind::einstein ? static_cast<unsigned>(j) : 0u;
    out.push_back({A + B - j, std::move(coeff), c_power});
  }
  return out;
}

VerificationReport verify_expand_product(const ModelSpace& space, int A, int B) {
  VerificationReport rep;
  rep.suite = "develop";
  rep.space = std::string(space.name());
  const auto table = gjms_table(space, A + B);
  MultiPoly rhs;
  for (const auto& t : expand_product(space, A, B)) {
    rhs += t.coefficient * var(Var::c).pow(t.c_power) * table[static_cast<std::size_t>(t.order)];
  }
  rep.expect_equal("develop",
                   "P_2A P_2B = sum_j (-1)^j A!B!(A+B)!/(j!(A-j)!(B-j)!(A+B-j)!) c^j P_2(A+B-j)",
                   "A=" + std::to_string(A) + " B=" + std::to_string(B),
                   table[static_cast<std::size_t>(A)] * table[static_cast<std::size_t>(B)], rhs);
  return rep;
}

VerificationReport verify_restriction(int N) {
  require_order(N, "verify_restriction");
  VerificationReport rep;
  rep.suite = "restriction";
  rep.space = std::string(ModelSpace::sphere_hyperbolic().name());
  const MultiPoly P = gjms_poly(ModelSpace::sphere_hyperbolic(), N);
  const MultiPoly x = var(Var::x);
  const MultiPoly sum = half_q() + half_p();
  const MultiPoly diff = half_p() - half_q();

  const MultiPoly plus = substitute(P, {{Var::b2, shifted_square(Var::q) - x},
                                        {Var::c2, shifted_square(Var::p)}});
  const MultiPoly minus = substitute(P, {{Var::b2, shifted_square(Var::q)},
                                         {Var::c2, shifted_square(Var::p) + x}});
  MultiPoly plus_rhs(1);
  MultiPoly minus_rhs(1);
  for (int j = 0; j < N; ++j) {
    const MultiPoly a = sum - MultiPoly(N - 2 * j);
    plus_rhs *= x + a * (diff - MultiPoly(N - 2 * j - 1));
    minus_rhs *= x + a * (diff + MultiPoly(N - 2 * j - 1));
  }
  rep.expect_equal("restriction_plus",
                   "P_2N on functions of the first factor = prod_j (x + ((p+q)/2-N+2j)((p-q)/2-N+2j+1))",
                   order_param(N), plus, plus_rhs);
  rep.expect_equal("restriction_minus",
                   "P_2N on functions of the second factor = prod_j (x + ((p+q)/2-N+2j)((p-q)/2+N-2j-1))",
                   order_param(N), minus, minus_rhs);
  return rep;
}

VerificationReport verify_restriction_roots(int q, int p) {
  VerificationReport rep;
  rep.suite = "restriction";
  rep.space = std::string(ModelSpace::sphere_hyperbolic().name());
  const std::string params = "q=" + std::to_string(q) + " p=" + std::to_string(p);
  if (q < 1 || p < 1 || (q + p) % 2 != 0) {
    rep.note("restriction_roots: skipped " + params + " (needs q, p >= 1 and q+p even)");
    return rep;
  }
  const int N = (q + p) / 2;
  const MultiPoly P = gjms_poly(ModelSpace::sphere_hyperbolic(), N);
  const MultiPoly x = var(Var::x);
  const auto qq = MultiPoly(q);
  const auto pp = MultiPoly(p);
  const MultiPoly bq = (qq - MultiPoly(1)) * (qq - MultiPoly(1)) * rat(1, 4);
  const MultiPoly cp = (pp - MultiPoly(1)) * (pp - MultiPoly(1)) * rat(1, 4);
  const MultiPoly plus = substitute(P, {{Var::b2, bq - x}, {Var::c2, cp}});
  const MultiPoly minus = substitute(P, {{Var::b2, bq}, {Var::c2, cp + x}});

  MultiPoly plus_rhs(1);
  MultiPoly minus_rhs(1);
  for (int j = 0; j < N; ++j) {
    plus_rhs *= x + MultiPoly(std::int64_t{2} * j * (2 * j + 1 - q));
    minus_rhs *= x + MultiPoly(std::int64_t{2} * j * (p - 1 - 2 * j));
  }
  rep.expect_equal("critical_plus", "critical P_n on the first factor = prod_j (x + 2j(2j+1-q))",
                   params, plus, plus_rhs);
  rep.expect_equal("critical_minus", "critical P_n on the second factor = prod_j (x + 2j(p-1-2j))",
                   params, minus, minus_rhs);
  for (int j = 0; j < N; ++j) {
    const MultiPoly root(std::int64_t{-2} * j * (2 * j + 1 - q));
    rep.expect_equal("critical_root_plus", "x = -2j(2j+1-q) annihilates the first-factor restriction",
                     params + " j=" + std::to_string(j), substitute(plus, Var::x, root), MultiPoly());
  }
  return rep;
}

VerificationReport verify_model_space(const ModelSpace& space, int N) {
  require_order(N, "verify_model_space");
  VerificationReport rep;
  rep.suite = "gjms";
  rep.space = std::string(space.name());
  const std::string params = order_param(N);
  const MultiPoly P = gjms_poly(space, N);
  const auto ops = space.operator_vars();

  rep.expect_true("operator_degree", "P_2N has operator degree N", params,
                  P.total_degree(ops) == N, "degree=" + std::to_string(P.total_degree(ops)));
  const MultiPoly leading = space.is_product() ? var(Var::c2) - var(Var::b2) : var(Var::x);
  rep.expect_equal("leading_part", "top part of P_2N is Delta^N", params,
                   P.homogeneous_part(ops, static_cast<unsigned>(N)),
                   leading.pow(static_cast<unsigned>(N)));
  rep.expect_equal("q_curvature", "P_2N(1) = (-1)^N (nu-N) Q_2N", params,
                   apply_to_constant(space, P),
                   sign_power(N) * (space.half_dimension() - MultiPoly(N)) * q_value(space, N));

  switch (space.kind()) {
    case SpaceKind::sphere: {
      const MultiPoly P2 = gjms_poly(space, 1);
      MultiPoly prod(1);
      for (int i = 0; i < N; ++i) prod *= P2 + MultiPoly(i * (i + 1));
      rep.expect_equal("p2_form", "P_2N = prod_i (P_2 + i(i+1))", params, P, prod);
      break;
    }
    case SpaceKind::einstein: {
      rep.expect_equal("unit_scale", "c=1 recovers the sphere operator", params,
                       substitute(P, Var::c, MultiPoly(1)), gjms_poly(ModelSpace::sphere(), N));
      rep.expect_equal("q_scale", "Q_2N = c^N Q_2N(sphere)", params, q_value(space, N),
                       var(Var::c).pow(static_cast<unsigned>(N)) * q_value(ModelSpace::sphere(), N));
      break;
    }
    case SpaceKind::pseudo_sphere:
    case SpaceKind::sphere_hyperbolic: {
      const MultiPoly b2_sphere =
          (nu() * rat(2) - MultiPoly(1)).pow(2) * rat(1, 4) - var(Var::x);
      rep.expect_equal("sphere_specialisation", "b2 -> -x + (2nu-1)^2/4, c2 -> 1/4 gives the sphere",
                       params, substitute(P, {{Var::b2, b2_sphere}, {Var::c2, rat(1, 4)}}),
                       gjms_poly(ModelSpace::sphere(), N));
      rep.expect_equal("q_p_zero", "Q_2N at p=0, q=2nu is the sphere value", params,
                       substitute(q_value(space, N), {{Var::p, MultiPoly()}, {Var::q, nu() * rat(2)}}),
                       q_value(ModelSpace::sphere(), N));
      break;
    }
  }
  return rep;
}

}  // namespace gjms
