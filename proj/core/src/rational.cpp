#include "gjms/rational.hpp"

#include <stdexcept>

namespace gjms {

ExactRational::ExactRational(std::int64_t value) : value_(static_cast<long>(value)) {}

ExactRational::ExactRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("ExactRational: zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

ExactRational::ExactRational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

ExactRational ExactRational::parse(std::string_view text) {
  std::string s(text);
  mpq_class v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw std::invalid_argument("ExactRational: cannot parse '" + s + "'");
  }
  if (v.get_den() == 0) throw std::domain_error("ExactRational: zero denominator");
  v.canonicalize();
  return ExactRational(v);
}

std::string ExactRational::str() const { return value_.get_str(10); }

ExactRational& ExactRational::operator+=(const ExactRational& o) {
  value_ += o.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& o) {
  value_ -= o.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& o) {
  value_ *= o.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.is_zero()) throw std::domain_error("ExactRational: division by zero");
  value_ /= o.value_;
  return *this;
}

ExactRational ExactRational::operator-() const {
  ExactRational r;
  r.value_ = -value_;
  return r;
}

ExactRational ExactRational::pow(unsigned e) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
  return ExactRational(mpq_class(num, den));
}

ExactRational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return ExactRational(mpq_class(r));
}

ExactRational binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: negative top argument");
  if (k < 0 || k > n) return ExactRational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return ExactRational(mpq_class(r));
}

}  // namespace gjms
