#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "gjms/model_space.hpp"
#include "gjms/report.hpp"

namespace gjms {

/// Polynomial in lambda with operator-valued coefficients.
struct ResiduePoly {
  ModelSpace space;
  int order = 0;
  MultiPoly poly;
};

/// P^res_2N(lambda) by Lagrange interpolation over the nodes -nu+2N-j.
ResiduePoly residue_poly(const ModelSpace& space, int N);
/// P^res_2, ..., P^res_2N from one memoised recursion.
std::vector<ResiduePoly> residue_table(const ModelSpace& space, int N);

/// Node lambda = -nu + 2N - j.
MultiPoly residue_node(const ModelSpace& space, int N, int j);

enum class ResidueCheck { interpolation, mystic };

std::string_view residue_check_name(ResidueCheck kind);
VerificationReport verify_residue_properties(const ModelSpace& space, int N, ResidueCheck kind);

/// Sphere closed form of Q^res_2N(lambda), with its characterising checks.
std::pair<ResiduePoly, VerificationReport> q_res_sphere(int N);

}  // namespace gjms
