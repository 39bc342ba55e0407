#include "gjms/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace gjms {

TruncSeries::TruncSeries(unsigned order) : order_(order), coeffs_(order + 1) {}

TruncSeries::TruncSeries(unsigned order, std::vector<MultiPoly> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::one(unsigned order) {
  TruncSeries s(order);
  s.coeffs_[0] = MultiPoly(1);
  return s;
}

MultiPoly TruncSeries::coefficient(unsigned i) const {
  return i <= order_ ? coeffs_[i] : MultiPoly();
}

void TruncSeries::set(unsigned i, MultiPoly value) { coeffs_.at(i) = std::move(value); }

TruncSeries TruncSeries::truncate(unsigned order) const {
  return TruncSeries(std::min(order, order_),
                     std::vector<MultiPoly>(coeffs_.begin(),
                                            coeffs_.begin() + std::min(order, order_) + 1));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.order_ < order_) *this = truncate(o.order_);
  for (unsigned i = 0; i <= order_; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  if (o.order_ < order_) *this = truncate(o.order_);
  for (unsigned i = 0; i <= order_; ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  const unsigned k = std::min(order_, o.order_);
  TruncSeries out(k);
  for (unsigned i = 0; i <= k; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= k; ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return out;
}

TruncSeries TruncSeries::scaled(const MultiPoly& c) const {
  TruncSeries out(order_);
  for (unsigned i = 0; i <= order_; ++i) out.coeffs_[i] = coeffs_[i] * c;
  return out;
}

TruncSeries TruncSeries::sqrt() const {
  if (coeffs_[0] != MultiPoly(1)) {
    throw std::domain_error("TruncSeries::sqrt: constant term must be 1, got " +
                            coeffs_[0].str());
  }
  TruncSeries w(order_);
  w.coeffs_[0] = MultiPoly(1);
  for (unsigned m = 1; m <= order_; ++m) {
    MultiPoly acc = coeffs_[m];
    for (unsigned i = 1; i < m; ++i) acc -= w.coeffs_[i] * w.coeffs_[m - i];
    w.coeffs_[m] = acc / ExactRational(2);
  }
  return w;
}

TruncSeries TruncSeries::compose_monomial(unsigned power, const MultiPoly& scale,
                                          unsigned order) const {
  if (power == 0) throw std::invalid_argument("compose_monomial: power must be positive");
  TruncSeries out(order);
  MultiPoly scale_pow(1);
  for (unsigned i = 0; i <= order_ && i * power <= order; ++i) {
    out.coeffs_[i * power] = coeffs_[i] * scale_pow;
    scale_pow *= scale;
  }
  return out;
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

TruncSeries binomial_series(const MultiPoly& exponent, const MultiPoly& coeff, unsigned step,
                            unsigned order) {
  if (step == 0) throw std::invalid_argument("binomial_series: step must be positive");
  TruncSeries out(order);
  MultiPoly coeff_pow(1);
  for (unsigned k = 0; k * step <= order; ++k) {
    out.set(k * step, binom_poly(exponent, k) * coeff_pow);
    coeff_pow *= coeff;
  }
  return out;
}

}  // namespace gjms
