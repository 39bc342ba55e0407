#include "gjms/mcal.hpp"

#include <stdexcept>
#include <string>

namespace gjms {

namespace {

ExactRational rat(std::int64_t a, std::int64_t b = 1) { return ExactRational(a, b); }

std::string order_param(int N) { return "N=" + std::to_string(N); }

void require_order(int N, const char* what) {
  if (N < 1) throw std::invalid_argument(std::string(what) + ": order must be >= 1");
}

MultiPoly dq(const ModelSpace&) {
  const MultiPoly h = (var(Var::q) - MultiPoly(1)) / rat(2);
  return h * h - var(Var::b2);
}

MultiPoly dp(const ModelSpace&) {
  const MultiPoly h = (var(Var::p) - MultiPoly(1)) / rat(2);
  return h * h - var(Var::c2);
}

}  // namespace

McalResult build_M(const ModelSpace& space, int N) {
  require_order(N, "build_M");
  const auto table = gjms_table(space, N);
  CompositionSum sums(table);
  McalResult out{space, N, {}, {}, {}};
  out.m_operator = sums.full(N);
  out.primary_operator = table[static_cast<std::size_t>(N)] - out.m_operator;
  for (auto& I : enumerate_compositions(N)) {
    if (I.length() == 1) continue;
    ExactRational c = -m_coefficient(I);
    out.primary_terms.emplace_back(std::move(I), std::move(c));
  }
  return out;
}

McalResult primary_part(const ModelSpace& space, int N) { return build_M(space, N); }

MultiPoly build_M_by_enumeration(const ModelSpace& space, int N) {
  require_order(N, "build_M_by_enumeration");
  const auto table = gjms_table(space, N);
  MultiPoly out;
  for (const auto& I : enumerate_compositions(N)) {
    MultiPoly term(m_coefficient(I));
    for (int part : I.parts()) term *= table[static_cast<std::size_t>(part)];
    out += term;
  }
  return out;
}

MultiPoly delta_schouten_power(const ModelSpace& space, int k) {
  const auto ku = static_cast<unsigned>(k);
  switch (space.kind()) {
    case SpaceKind::sphere: return -(MultiPoly(rat(1, 2)).pow(ku) * var(Var::x));
    case SpaceKind::einstein: return -((var(Var::c) / rat(2)).pow(ku) * var(Var::x));
    case SpaceKind::pseudo_sphere:
    case SpaceKind::sphere_hyperbolic:
      return -(rat(1, 2).pow(ku) * dq(space) - rat(-1, 2).pow(ku) * dp(space));
  }
  return {};
}

MultiPoly trace_term(const ModelSpace& space, int k) {
  const auto spectrum = space.schouten_spectrum();
  const auto ku = static_cast<unsigned>(k + 1);
  if (!space.is_product()) {
    const auto& [value, mult] = spectrum.front();
    return (var(Var::nu) - MultiPoly(1)) * mult * value.pow(ku);
  }
  MultiPoly out;
  const Var dims[2] = {Var::q, Var::p};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& [value, mult] = spectrum[i];
    out += (var(dims[i]) / rat(2) - MultiPoly(1)) * mult * value.pow(ku);
  }
  return out;
}

VerificationReport verify_closed_form(const ModelSpace& space, int N) {
  require_order(N, "verify_closed_form");
  VerificationReport rep;
  rep.suite = "closed_form";
  rep.space = std::string(space.name());
  const std::string params = order_param(N);
  const auto table = gjms_table(space, std::max(N, 2));
  const MultiPoly& P2 = table[1];
  const McalResult res = build_M(space, N);
  const MultiPoly& M = res.m_operator;
  const ExactRational scale = factorial(N) * factorial(N - 1);

  switch (space.kind()) {
    case SpaceKind::sphere:
      rep.expect_equal("sphere", "M_2N = N!(N-1)! P_2", params, M, scale * P2);
      break;
    case SpaceKind::einstein:
      rep.expect_equal("einstein", "M_2N = N!(N-1)! c^(N-1) P_2", params, M,
                       scale * var(Var::c).pow(static_cast<unsigned>(N - 1)) * P2);
      break;
    case SpaceKind::pseudo_sphere:
    case SpaceKind::sphere_hyperbolic: {
      const MultiPoly b2 = var(Var::b2);
      const MultiPoly c2 = var(Var::c2);
      if (N % 2 == 0) {
        rep.expect_equal("product_even", "M_2N = N!(N-1)! (1/2 - b2 - c2) for N even", params, M,
                         scale * (MultiPoly(rat(1, 2)) - b2 - c2));
        rep.expect_equal("nonlinear_even", "2 M_2N = N!(N-1)! (P_4 - P_2^2) for N even", params,
                         M * rat(2), scale * (table[2] - P2 * P2));
      } else {
        rep.expect_equal("product_odd", "M_2N = N!(N-1)! (c2 - b2) for N odd", params, M,
                         scale * (c2 - b2));
        rep.expect_equal("nonlinear_odd", "M_2N = N!(N-1)! P_2 for N odd", params, M, scale * P2);
      }
      break;
    }
  }

  const MultiPoly M0 = M - apply_to_constant(space, M);
  rep.expect_equal("divergence_form", "M_2N - M_2N(1) = -c_N delta(P^(N-1) # d)", params, M0,
                   -(c_coefficient(N) * delta_schouten_power(space, N - 1)));

  const auto ops = space.operator_vars();
  if (N >= 2) {
    const MultiPoly lead = res.primary_operator.homogeneous_part(ops, static_cast<unsigned>(N));
    rep.expect_equal("primary_leading", "primary part is Delta^N + lower order", params, lead,
                     P2.homogeneous_part(ops, 1).pow(static_cast<unsigned>(N)));
  }
  rep.expect_true("self_adjoint_order", "M_2N has operator degree at most 1 in Delta-type symbols",
                  params, M.total_degree(ops) <= 1,
                  "degree=" + std::to_string(M.total_degree(ops)));

  if (space.kind() == SpaceKind::sphere && N >= 2) {
    // P_2N + sum_k (-1)^(N-k) C(N,k) sum_a (-1)^a C(N-1,a-1) w(a,k) P_2a P_2(N-k-a)
    MultiPoly total = table[static_cast<std::size_t>(N)];
    for (int k = 0; k <= N - 2; ++k) {
      MultiPoly Vk;
      for (int a = 1; a <= N - 1 - k; ++a) {
        const ExactRational w = factorial(N - a) * factorial(N - a - 1) /
                                (factorial(N - a - k) * factorial(N - a - k - 1));
        Vk += sign_power(a) * binomial(N - 1, a - 1) * w * table[static_cast<std::size_t>(a)] *
              table[static_cast<std::size_t>(N - k - a)];
      }
      total += sign_power(N - k) * binomial(N, k) * Vk;
    }
    rep.expect_equal("finale", "P_2N + sum_k (-1)^(N-k) C(N,k) V_k = N!(N-1)! P_2", params, total,
                     scale * P2);
  }
  return rep;
}

VerificationReport verify_partial_sum(int a, int N) {
  if (N < 2 || a < 1 || a >= N) {
    throw std::invalid_argument("verify_partial_sum: needs N >= 2 and 1 <= a <= N-1");
  }
  const ModelSpace space = ModelSpace::sphere();
  VerificationReport rep;
  rep.suite = "partial_sum";
  rep.space = std::string(space.name());
  const auto table = gjms_table(space, N);

  MultiPoly lhs;
  for (const auto& J : enumerate_compositions(N - a)) {
    MultiPoly term(m_coefficient(Composition({a}).concat(J)));
    for (int part : J.parts()) term *= table[static_cast<std::size_t>(part)];
    lhs += term;
  }
  MultiPoly rhs;
  for (int k = 0; k <= N - a - 1; ++k) {
    const ExactRational w = factorial(N - a) * factorial(N - a - 1) /
                            (factorial(N - a - k) * factorial(N - a - k - 1));
    rhs += sign_power(N - a - k) * binomial(N, k) * w * table[static_cast<std::size_t>(N - a - k)];
  }
  rhs *= binomial(N - 1, a - 1);
  rep.expect_equal("partial_sum",
                   "sum_J m_(a,J) P_2J = C(N-1,a-1) sum_k (-1)^(N-a-k) C(N,k) w_k P_2(N-a-k)",
                   "a=" + std::to_string(a) + " N=" + std::to_string(N), lhs, rhs);
  return rep;
}

VerificationReport verify_generating_function(const ModelSpace& space, int K) {
  if (K < 2) throw std::invalid_argument("verify_generating_function: K must be >= 2");
  VerificationReport rep;
  rep.suite = "generating_function";
  rep.space = std::string(space.name());
  const int kmax = K / 2;
  const auto uK = static_cast<unsigned>(K);

  // sum_N V_2N s^(N-1) with s = r^2/4
  TruncSeries lhs_s(static_cast<unsigned>(kmax));
  TruncSeries rhs_s(static_cast<unsigned>(kmax));
  for (int k = 0; k <= kmax; ++k) {
    const int N = k + 1;
    const MultiPoly V = -build_M(space, N).m_operator / factorial(N - 1).pow(2);
    lhs_s.set(static_cast<unsigned>(k), V);
    rhs_s.set(static_cast<unsigned>(k),
              MultiPoly(rat(k + 1) * ExactRational(2).pow(static_cast<unsigned>(k))) *
                  (delta_schouten_power(space, k) + trace_term(space, k)));
  }
  const MultiPoly quarter(rat(1, 4));
  const TruncSeries lhs = lhs_s.compose_monomial(2, quarter, uK);
  const TruncSeries rhs = rhs_s.compose_monomial(2, quarter, uK);
  for (unsigned i = 0; i <= uK; i += 2) {
    rep.expect_equal("generating_function",
                     "sum_N V_2N (r^2/4)^(N-1) = sum_k (k+1)(r^2/2)^k [delta(P^k#d) + tr(A P^(k+1))]",
                     "r^" + std::to_string(i), lhs.coefficient(i), rhs.coefficient(i));
  }

  for (int N = 1; 2 * N <= kmax + 1; ++N) {
    const MultiPoly M = build_M(space, 2 * N).m_operator;
    rep.expect_equal("reduction_rule", "M_4N - M_4N(1) = -c_2N delta(P^(2N-1) # d)",
                     order_param(2 * N), M - apply_to_constant(space, M),
                     -(c_coefficient(2 * N) * delta_schouten_power(space, 2 * N - 1)));
  }
  return rep;
}

}  // namespace gjms
