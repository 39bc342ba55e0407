#include "gjms/residue.hpp"

#include <stdexcept>
#include <string>

#include "gjms/mcal.hpp"

namespace gjms {

namespace {

void require_order(int N, const char* what) {
  if (N < 1) throw std::invalid_argument(std::string(what) + ": order must be >= 1");
}

MultiPoly lambda() { return var(Var::lambda); }

std::string order_param(int N) { return "N=" + std::to_string(N); }

// Lagrange basis over nodes lambda_k = -nu + 2N - k (k = 1..N), equal to 1 at node j.
// Node differences are the integers k - j.
MultiPoly lagrange_basis(const MultiPoly& nu, int N, int j) {
  MultiPoly out(1);
  for (int k = 1; k <= N; ++k) {
    if (k == j) continue;
    out *= (lambda() + nu - MultiPoly(2 * N - k)) / ExactRational(k - j);
  }
  return out;
}

}  // namespace

MultiPoly residue_node(const ModelSpace& space, int N, int j) {
  return MultiPoly(2 * N - j) - space.half_dimension();
}

std::vector<ResiduePoly> residue_table(const ModelSpace& space, int N) {
  require_order(N, "residue_table");
  const auto P = gjms_table(space, N);
  const MultiPoly nu = space.half_dimension();
  std::vector<ResiduePoly> out;
  out.push_back({space, 1, P[1]});
  for (int n = 2; n <= N; ++n) {
    MultiPoly acc = sign_power(n - 1) * lagrange_basis(nu, n, n) * P[static_cast<std::size_t>(n)];
    for (int j = 1; j < n; ++j) {
      const MultiPoly lower = substitute(out[static_cast<std::size_t>(n - j - 1)].poly, Var::lambda,
                                         residue_node(space, n, j));
      acc += sign_power(j) * lagrange_basis(nu, n, j) * P[static_cast<std::size_t>(j)] * lower;
    }
    out.push_back({space, n, std::move(acc)});
  }
  return out;
}

ResiduePoly residue_poly(const ModelSpace& space, int N) { return residue_table(space, N).back(); }

std::string_view residue_check_name(ResidueCheck kind) {
  return kind == ResidueCheck::interpolation ? "interpolation" : "mystic";
}

VerificationReport verify_residue_properties(const ModelSpace& space, int N, ResidueCheck kind) {
  require_order(N, "verify_residue_properties");
  VerificationReport rep;
  rep.suite = std::string(residue_check_name(kind));
  rep.space = std::string(space.name());
  const std::string params = order_param(N);
  const auto table = residue_table(space, N);
  const MultiPoly& R = table.back().poly;

  if (kind == ResidueCheck::mystic) {
    const MultiPoly d = substitute(derivative(R, Var::lambda, static_cast<unsigned>(N - 1)),
                                   Var::lambda, MultiPoly());
    rep.expect_equal("mystic", "d^(N-1)/dlambda^(N-1) P^res_2N at 0 equals M_2N", params, d,
                     build_M(space, N).m_operator);
    return rep;
  }

  const auto P = gjms_table(space, N);
  rep.expect_true("degree", "P^res_2N has lambda-degree N-1", params,
                  R.degree(Var::lambda) == static_cast<unsigned>(N - 1),
                  "degree=" + std::to_string(R.degree(Var::lambda)));

  std::vector<MultiPoly> values(static_cast<std::size_t>(N) + 1);
  for (int j = 1; j <= N; ++j) {
    const MultiPoly node = residue_node(space, N, j);
    MultiPoly expected;
    if (j == N) {
      expected = sign_power(N - 1) * P[static_cast<std::size_t>(N)];
    } else {
      expected = sign_power(j) * P[static_cast<std::size_t>(j)] *
                 substitute(table[static_cast<std::size_t>(N - j - 1)].poly, Var::lambda, node);
    }
    rep.expect_equal("node_value",
                     j == N ? "P^res_2N(-nu+N) = (-1)^(N-1) P_2N"
                            : "P^res_2N(-nu+2N-j) = (-1)^j P_2j P^res_2N-2j(-nu+2N-j)",
                     params + " j=" + std::to_string(j), substitute(R, Var::lambda, node), expected);
    values[static_cast<std::size_t>(j)] = std::move(expected);
  }

  // Re-interpolate through the same nodes with a generic Lagrange formula.
  std::vector<MultiPoly> nodes;
  for (int j = 1; j <= N; ++j) nodes.push_back(residue_node(space, N, j));
  MultiPoly rebuilt;
  for (int j = 1; j <= N; ++j) {
    MultiPoly basis(1);
    for (int k = 1; k <= N; ++k) {
      if (k == j) continue;
      const MultiPoly gap = nodes[static_cast<std::size_t>(j - 1)] - nodes[static_cast<std::size_t>(k - 1)];
      if (!gap.is_constant() || gap.is_zero()) throw std::logic_error("residue nodes not separated");
      basis *= (lambda() - nodes[static_cast<std::size_t>(k - 1)]) / gap.constant_term();
    }
    rebuilt += basis * values[static_cast<std::size_t>(j)];
  }
  rep.expect_equal("reinterpolation", "Lagrange interpolation through the N node values", params, R,
                   rebuilt);
  return rep;
}

std::pair<ResiduePoly, VerificationReport> q_res_sphere(int N) {
  require_order(N, "q_res_sphere");
  const ModelSpace space = ModelSpace::sphere();
  const MultiPoly nu = var(Var::nu);

  auto closed_form = [&](int n) {
    MultiPoly out = -sign_power(n) * nu * lambda();
    for (int j = 1; j < n; ++j) out *= (nu - MultiPoly(j)) * (lambda() - MultiPoly(n + j));
    return out;
  };

  VerificationReport rep;
  rep.suite = "q_res";
  rep.space = std::string(space.name());
  const std::string params = order_param(N);
  const MultiPoly Q = closed_form(N);
  const auto P = gjms_table(space, N);

  for (int j = 1; j < N; ++j) {
    const MultiPoly node = residue_node(space, N, j);
    rep.expect_equal("character_A", "Q^res_2N(-nu+2N-j) = (-1)^j P_2j(1) Q^res_2N-2j(-nu+2N-j)",
                     params + " j=" + std::to_string(j), substitute(Q, Var::lambda, node),
                     sign_power(j) * apply_to_constant(space, P[static_cast<std::size_t>(j)]) *
                         substitute(closed_form(N - j), Var::lambda, node));
  }
  rep.expect_equal("character_B", "Q^res_2N(-nu+N) = -(nu-N) Q_2N", params,
                   substitute(Q, Var::lambda, residue_node(space, N, N)),
                   -(nu - MultiPoly(N)) * q_value(space, N));
  rep.expect_equal("character_C", "Q^res_2N(0) = 0", params, substitute(Q, Var::lambda, MultiPoly()),
                   MultiPoly());
  const MultiPoly critical = substitute(Q, Var::nu, MultiPoly(N));
  rep.expect_equal("critical", "at nu=N, d/dlambda Q^res_2N at 0 equals Q_2N", params,
                   substitute(derivative(critical, Var::lambda), Var::lambda, MultiPoly()),
                   substitute(q_value(space, N), Var::nu, MultiPoly(N)));
  rep.expect_true("degree", "Q^res_2N has lambda-degree N", params,
                  Q.degree(Var::lambda) == static_cast<unsigned>(N),
                  "degree=" + std::to_string(Q.degree(Var::lambda)));
  return {ResiduePoly{space, N, Q}, std::move(rep)};
}

}  // namespace gjms
