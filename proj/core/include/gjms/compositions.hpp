#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <map>

#include "gjms/poly.hpp"
#include "gjms/rational.hpp"
#include "gjms/report.hpp"

namespace gjms {

/// Ordered tuple of positive integers.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::size_t length() const { return parts_.size(); }
  int size() const { return size_; }
  int first() const { return parts_.front(); }
  int last() const { return parts_.back(); }

  Composition reversed() const;
  /// First n parts (1 <= n <= length()).
  Composition prefix(std::size_t n) const;
  /// Parts from index `from` onward (from < length()).
  Composition suffix(std::size_t from) const;
  Composition concat(const Composition& tail) const;

  std::string str() const;

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All compositions of N: first part outermost, ascending. N=3 gives
/// (1,1,1), (1,2), (2,1), (3).
std::vector<Composition> enumerate_compositions(int N);

/// Closed form -(-1)^r N!(N-1)! prod 1/(I_j!(I_j-1)!) prod 1/(I_j+I_{j+1}).
ExactRational m_coefficient(const Composition& I);
/// Same value built from the first-part recursion, starting at m_(N) = 1.
ExactRational m_coefficient_recursive(const Composition& I);

/// c_N = 2^{N-1} N! (N-1)!
ExactRational c_coefficient(int N);

struct CoefficientTable {
  int order = 0;
  std::vector<std::pair<Composition, ExactRational>> entries;

  ExactRational at(const Composition& I) const;
  bool all_integral() const;
};

CoefficientTable coefficient_table(int N);

/// Sums of m_I-weighted products over compositions, memoised on (remaining size, previous part).
/// tail(rem, last) = sum over J of rem of prod_k (-v_{J_k} / (J_k! (J_k-1)!)) times
/// prod 1/(adjacent part sums), counting 1/(last + J_1).
class CompositionSum {
 public:
  /// values[j] is the factor attached to a part j (index 0 unused).
  explicit CompositionSum(std::vector<MultiPoly> values) : values_(std::move(values)) {}

  const MultiPoly& tail(int rem, int last);
  MultiPoly part(int a) const;
  /// sum over |I|=N of m_I prod_k values[I_k]
  MultiPoly full(int N);

 private:
  std::vector<MultiPoly> values_;
  std::map<std::pair<int, int>, MultiPoly> memo_;
};

enum class CoefficientIdentity { sum_zero, strong, reversal, variation, beta_kernel, divergence_cancel };

std::string_view identity_name(CoefficientIdentity kind);

/// Checks one identity family at order N.
VerificationReport verify_coefficient_identity(CoefficientIdentity kind, int N);

}  // namespace gjms
