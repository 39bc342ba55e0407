#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gjms/poly.hpp"
#include "gjms/report.hpp"

namespace gjms {

enum class SpaceKind { sphere, einstein, pseudo_sphere, sphere_hyperbolic };

/// Symbolic model space. Sphere and Einstein carry the half dimension nu
/// (Einstein also the scale c); the product spaces carry q, p with nu = (q+p)/2.
class ModelSpace {
 public:
  static ModelSpace sphere() { return ModelSpace(SpaceKind::sphere); }
  static ModelSpace einstein() { return ModelSpace(SpaceKind::einstein); }
  static ModelSpace pseudo_sphere() { return ModelSpace(SpaceKind::pseudo_sphere); }
  static ModelSpace sphere_hyperbolic() { return ModelSpace(SpaceKind::sphere_hyperbolic); }
  static std::optional<ModelSpace> parse(std::string_view name);
  static std::span<const ModelSpace> all();

  SpaceKind kind() const { return kind_; }
  std::string_view name() const;
  bool is_product() const {
    return kind_ == SpaceKind::pseudo_sphere || kind_ == SpaceKind::sphere_hyperbolic;
  }

  /// Operator symbols: {x} or {b2, c2}.
  std::span<const Var> operator_vars() const;
  MultiPoly half_dimension() const;
  /// Rules sending the operator symbols to their action on constants.
  std::vector<Substitution> constant_rules() const;
  /// Schouten eigenvalues with multiplicities.
  std::vector<std::pair<MultiPoly, MultiPoly>> schouten_spectrum() const;

  friend bool operator==(const ModelSpace&, const ModelSpace&) = default;

 private:
  explicit ModelSpace(SpaceKind k) : kind_(k) {}
  SpaceKind kind_;
};

/// Element of the commutative operator algebra of a model space.
struct OperatorElem {
  ModelSpace space;
  MultiPoly poly;

  int operator_degree() const { return poly.total_degree(space.operator_vars()); }
};

/// GJMS operator P_2N (N >= 1).
MultiPoly gjms_poly(const ModelSpace& space, int N);
OperatorElem gjms(const ModelSpace& space, int N);
/// P_0 = 1, P_2, ..., P_2N.
std::vector<MultiPoly> gjms_table(const ModelSpace& space, int N);

/// Q-curvature Q_2N (N >= 1).
MultiPoly q_value(const ModelSpace& space, int N);

MultiPoly apply_to_constant(const ModelSpace& space, const MultiPoly& op);

/// Power sum tr(P^k) and elementary trace tr(wedge^k P) of the Schouten tensor.
MultiPoly schouten_power_sum(const ModelSpace& space, int k);
std::vector<MultiPoly> schouten_elementary(const ModelSpace& space, int k_max);

struct ProductTerm {
  int order = 0;
  ExactRational coefficient;
  unsigned c_power = 0;
};

/// P_2A P_2B as a combination of c^j P_2(A+B-j); order 0 is the identity.
/// Sphere and Einstein only.
std::vector<ProductTerm> expand_product(const ModelSpace& space, int A, int B);
VerificationReport verify_expand_product(const ModelSpace& space, int A, int B);

/// Restrictions of the sphere-hyperbolic GJMS operators to either factor, symbolic in q, p.
VerificationReport verify_restriction(int N);
/// Kernel factorisation at the critical order N = (q+p)/2 for numeric q + p even.
VerificationReport verify_restriction_roots(int q, int p);

/// Degree, leading part, constant action and specialisation checks at order N.
VerificationReport verify_model_space(const ModelSpace& space, int N);

}  // namespace gjms
