#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gjms/compositions.hpp"
#include "gjms/model_space.hpp"
#include "gjms/report.hpp"
#include "gjms/series.hpp"

namespace gjms {

/// coefficient * P_2J(Q_2a)
struct QPrimaryTerm {
  Composition operators;
  int a = 0;
  ExactRational coefficient;

  std::string str() const;
};

/// Symbolic terms of the primary part of Q_2N; empty for N = 1.
std::vector<QPrimaryTerm> q_primary_terms(int N);
std::string render_q_primary(const std::vector<QPrimaryTerm>& terms);

/// Constant action of an order-M GJMS operator: (-1)^M (nu - M) Q_2M.
MultiPoly gjms_constant_factor(const ModelSpace& space, int M);

/// Primary part of Q_2N evaluated on the model space.
MultiPoly q_primary(const ModelSpace& space, int N);

struct QDefect {
  ModelSpace space;
  int order = 0;
  MultiPoly q;
  MultiPoly q_primary;
  /// Q_2N minus its primary part.
  MultiPoly lambda;
};

QDefect lambda_defect(const ModelSpace& space, int N);
/// Lambda_2, ..., Lambda_2N at indices 1..N (index 0 holds 0).
std::vector<MultiPoly> lambda_table(const ModelSpace& space, int N);

struct VolumeSeries {
  ModelSpace space;
  TruncSeries v;
  TruncSeries w;
  /// G(r) through r^(K/2), which is what G(r^2/4) needs through r^K.
  TruncSeries g;
};

/// v(r) by binomial expansion, cross-checked against the Schouten trace route.
/// Throws std::logic_error if the two routes disagree.
VolumeSeries volume_series(const ModelSpace& space, unsigned K);
/// v(r) from v_2j = (-1/2)^j tr(wedge^j P).
TruncSeries volume_from_trace(const ModelSpace& space, unsigned K);
/// G(r) = 1 + sum_N (-1)^N Lambda_2N r^N / (N!(N-1)!) through r^K.
TruncSeries g_series(const ModelSpace& space, unsigned K);

enum class QIdentity { duality, quadratic, w_beta, pseudo_final, vanishing_critical, low_order, q_sphere };

std::string_view q_identity_name(QIdentity kind);

struct QIdentityParams {
  ModelSpace space = ModelSpace::sphere();
  int max_order = 6;
  int series_order = 14;
  std::vector<std::pair<int, int>> numeric_pairs = {{1, 1}, {1, 3}, {3, 3}, {3, 5}, {5, 5}};
  /// Assert the -4|P|^2 variant of the Q_4 formula as an identity (sphere only).
  bool m4_variant = false;
};

VerificationReport verify_q_identity(QIdentity kind, const QIdentityParams& params);

}  // namespace gjms
