#pragma once

#include <vector>

#include "gjms/poly.hpp"

namespace gjms {

/// Power series in r truncated after r^order, with polynomial coefficients.
class TruncSeries {
 public:
  explicit TruncSeries(unsigned order = 0);
  TruncSeries(unsigned order, std::vector<MultiPoly> coeffs);
  static TruncSeries one(unsigned order);

  unsigned order() const { return order_; }
  const MultiPoly& operator[](unsigned i) const { return coeffs_.at(i); }
  /// Coefficient of r^i, zero past the truncation order.
  MultiPoly coefficient(unsigned i) const;
  void set(unsigned i, MultiPoly value);
  const std::vector<MultiPoly>& coefficients() const { return coeffs_; }

  TruncSeries truncate(unsigned order) const;
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries scaled(const MultiPoly& c) const;
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /// Principal square root; throws std::domain_error unless the constant term is 1.
  TruncSeries sqrt() const;
  /// s(scale * r^power), truncated at `order`.
  TruncSeries compose_monomial(unsigned power, const MultiPoly& scale, unsigned order) const;

  bool is_zero() const;

 private:
  unsigned order_;
  std::vector<MultiPoly> coeffs_;
};

/// (1 + coeff * r^step)^exponent with a symbolic exponent.
TruncSeries binomial_series(const MultiPoly& exponent, const MultiPoly& coeff, unsigned step,
                            unsigned order);

}  // namespace gjms
