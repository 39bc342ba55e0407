#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gjms/rational.hpp"

namespace gjms {

/// Symbols available to polynomials. The order fixes the canonical term order.
enum class Var : std::uint8_t { nu, q, p, c, lambda, x, b2, c2, r, v2, v4, v6, v8 };

inline constexpr std::size_t kVarCount = 13;

std::string_view var_name(Var v);
std::optional<Var> parse_var(std::string_view name);
std::span<const Var> all_vars();

class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Var v, unsigned e = 1);

  unsigned exponent(Var v) const { return exps_[static_cast<std::size_t>(v)]; }
  void set_exponent(Var v, unsigned e);
  unsigned total_degree() const;
  unsigned degree_in(std::span<const Var> vars) const;
  bool is_one() const { return total_degree() == 0; }

  Monomial operator*(const Monomial& o) const;
  auto operator<=>(const Monomial&) const = default;

  std::string str() const;

 private:
  std::array<std::uint16_t, kVarCount> exps_{};
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are stored expanded; zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, ExactRational>;

  MultiPoly() = default;
  MultiPoly(const ExactRational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(std::int64_t c);          // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(static_cast<std::int64_t>(c)) {}  // NOLINT
  static MultiPoly variable(Var v);
  static MultiPoly term(const ExactRational& c, const Monomial& m);

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  ExactRational constant_term() const;
  bool depends_on(Var v) const;
  std::vector<Var> variables() const;

  unsigned degree(Var v) const;
  /// Largest total degree in the given variables; -1 for the zero polynomial.
  int total_degree(std::span<const Var> vars) const;
  /// Coefficient polynomial of v^k.
  MultiPoly coefficient_of(Var v, unsigned k) const;
  /// Sum of the terms whose degree in `vars` is exactly d.
  MultiPoly homogeneous_part(std::span<const Var> vars, unsigned d) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const ExactRational& c);
  MultiPoly operator-() const;
  MultiPoly pow(unsigned e) const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator/(MultiPoly a, const ExactRational& c);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Canonical expanded rendering, e.g. "nu^3 - 3/2*nu*x + 1".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const ExactRational& c);
  TermMap terms_;
};

using Substitution = std::pair<Var, MultiPoly>;

MultiPoly var(Var v);
MultiPoly substitute(const MultiPoly& f, Var v, const MultiPoly& value);
/// Simultaneous substitution; values may mention substituted variables.
MultiPoly substitute(const MultiPoly& f, std::span<const Substitution> rules);
MultiPoly substitute(const MultiPoly& f, std::initializer_list<Substitution> rules);
MultiPoly derivative(const MultiPoly& f, Var v, unsigned k = 1);
/// x(x-1)...(x-k+1)/k!
MultiPoly binom_poly(const MultiPoly& x, unsigned k);

}  // namespace gjms
