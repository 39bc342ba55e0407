#pragma once

#include <utility>
#include <vector>

#include "gjms/compositions.hpp"
#include "gjms/model_space.hpp"
#include "gjms/report.hpp"
#include "gjms/series.hpp"

namespace gjms {

struct McalResult {
  ModelSpace space;
  int order = 0;
  /// M_2N = sum over |I|=N of m_I P_2I.
  MultiPoly m_operator;
  /// Primary part P_2N - M_2N.
  MultiPoly primary_operator;
  /// Coefficients of the primary part: (I, -m_I) for I != (N).
  std::vector<std::pair<Composition, ExactRational>> primary_terms;
};

McalResult build_M(const ModelSpace& space, int N);
McalResult primary_part(const ModelSpace& space, int N);
/// Direct sum over all compositions; reference path for build_M.
MultiPoly build_M_by_enumeration(const ModelSpace& space, int N);

/// delta(P^k # d) on a model space, and tr(A P^(k+1)) with A acting as
/// (dim/2 - 1) on each factor.
MultiPoly delta_schouten_power(const ModelSpace& space, int k);
MultiPoly trace_term(const ModelSpace& space, int k);

/// Closed form of M_2N plus the identities that hold on the given space.
VerificationReport verify_closed_form(const ModelSpace& space, int N);
/// Partial sums over compositions with first part a, on the sphere.
VerificationReport verify_partial_sum(int a, int N);
/// Generating function of V_2N = -M_2N/((N-1)!)^2 through r^K.
VerificationReport verify_generating_function(const ModelSpace& space, int K);

}  // namespace gjms
