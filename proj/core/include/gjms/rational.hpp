#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace gjms {

/// Arbitrary-precision rational in lowest terms with positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  ExactRational(std::int64_t num, std::int64_t den);
  explicit ExactRational(const mpq_class& value);

  /// Parses "a" or "a/b" with optional leading sign.
  static ExactRational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }
  std::string str() const;
  const mpq_class& raw() const { return value_; }

  ExactRational& operator+=(const ExactRational& o);
  ExactRational& operator-=(const ExactRational& o);
  ExactRational& operator*=(const ExactRational& o);
  ExactRational& operator/=(const ExactRational& o);
  ExactRational operator-() const;

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  ExactRational pow(unsigned e) const;

 private:
  mpq_class value_{0};
};

ExactRational factorial(int n);
/// Binomial coefficient for integer n >= 0; zero when k < 0 or k > n.
ExactRational binomial(int n, int k);
/// (-1)^k
inline ExactRational sign_power(int k) { return (k % 2 == 0) ? ExactRational(1) : ExactRational(-1); }

}  // namespace gjms
