#include "gjms/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace gjms {

namespace {

constexpr std::array<std::string_view, kVarCount> kNames = {
    "nu", "q", "p", "c", "lambda", "x", "b2", "c2", "r", "v2", "v4", "v6", "v8"};

constexpr std::array<Var, kVarCount> kVars = {Var::nu, Var::q,  Var::p,  Var::c,  Var::lambda,
                                              Var::x,  Var::b2, Var::c2, Var::r,  Var::v2,
                                              Var::v4, Var::v6, Var::v8};

// Graded order, higher degree first; ties broken by exponent vector, larger first.
bool render_before(const Monomial& a, const Monomial& b) {
  const unsigned da = a.total_degree();
  const unsigned db = b.total_degree();
  if (da != db) return da > db;
  return b < a;
}

}  // namespace

std::string_view var_name(Var v) { return kNames[static_cast<std::size_t>(v)]; }

std::optional<Var> parse_var(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (kNames[i] == name) return kVars[i];
  }
  return std::nullopt;
}

std::span<const Var> all_vars() { return kVars; }

Monomial Monomial::of(Var v, unsigned e) {
  Monomial m;
  m.set_exponent(v, e);
  return m;
}

void Monomial::set_exponent(Var v, unsigned e) {
  if (e > 0xFFFFu) throw std::overflow_error("Monomial: exponent overflow");
  exps_[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

unsigned Monomial::degree_in(std::span<const Var> vars) const {
  unsigned d = 0;
  for (Var v : vars) d += exponent(v);
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    const unsigned e = static_cast<unsigned>(exps_[i]) + o.exps_[i];
    if (e > 0xFFFFu) throw std::overflow_error("Monomial: exponent overflow");
    m.exps_[i] = static_cast<std::uint16_t>(e);
  }
  return m;
}

std::string Monomial::str() const {
  std::string out;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kNames[i];
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

MultiPoly::MultiPoly(const ExactRational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MultiPoly::MultiPoly(std::int64_t c) : MultiPoly(ExactRational(c)) {}

MultiPoly MultiPoly::variable(Var v) { return term(ExactRational(1), Monomial::of(v)); }

MultiPoly MultiPoly::term(const ExactRational& c, const Monomial& m) {
  MultiPoly r;
  if (!c.is_zero()) r.terms_.emplace(m, c);
  return r;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

ExactRational MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? ExactRational(0) : it->second;
}

bool MultiPoly::depends_on(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const auto& t) { return t.first.exponent(v) > 0; });
}

std::vector<Var> MultiPoly::variables() const {
  std::vector<Var> out;
  for (Var v : kVars) {
    if (depends_on(v)) out.push_back(v);
  }
  return out;
}

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

int MultiPoly::total_degree(std::span<const Var> vars) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree_in(vars)));
  return d;
}

MultiPoly MultiPoly::coefficient_of(Var v, unsigned k) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) != k) continue;
    Monomial rest = m;
    rest.set_exponent(v, 0);
    r.terms_.emplace(rest, c);
  }
  return r;
}

MultiPoly MultiPoly::homogeneous_part(std::span<const Var> vars, unsigned d) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.degree_in(vars) == d) r.terms_.emplace(m, c);
  }
  return r;
}

void MultiPoly::add_term(const Monomial& m, const ExactRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const ExactRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = r.terms_.try_emplace(ma * mb, ca);
      if (inserted) {
        it->second *= cb;
      } else {
        it->second += ca * cb;
      }
    }
  }
  std::erase_if(r.terms_, [](const auto& t) { return t.second.is_zero(); });
  return r;
}

MultiPoly operator/(MultiPoly a, const ExactRational& c) {
  if (c.is_zero()) throw std::domain_error("MultiPoly: division by zero");
  for (auto& [m, v] : a.terms_) v /= c;
  return a;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return render_before(a->first, b->first); });
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    const bool negative = c.sign() < 0;
    const ExactRational mag = negative ? -c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += m.str();
    } else {
      out += mag.str() + '*' + m.str();
    }
  }
  return out;
}

MultiPoly var(Var v) { return MultiPoly::variable(v); }

MultiPoly substitute(const MultiPoly& f, Var v, const MultiPoly& value) {
  const Substitution rule{v, value};
  return substitute(f, std::span<const Substitution>(&rule, 1));
}

MultiPoly substitute(const MultiPoly& f, std::span<const Substitution> rules) {
  std::vector<std::vector<MultiPoly>> powers(rules.size());
  for (std::size_t i = 0; i < rules.size(); ++i) powers[i].push_back(MultiPoly(1));
  auto power_of = [&](std::size_t i, unsigned e) -> const MultiPoly& {
    auto& cache = powers[i];
    while (cache.size() <= e) cache.push_back(cache.back() * rules[i].second);
    return cache[e];
  };

  MultiPoly out;
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    MultiPoly acc = MultiPoly::term(c, Monomial{});
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const unsigned e = m.exponent(rules[i].first);
      if (e == 0) continue;
      rest.set_exponent(rules[i].first, 0);
      acc *= power_of(i, e);
    }
    out += acc * MultiPoly::term(ExactRational(1), rest);
  }
  return out;
}

MultiPoly substitute(const MultiPoly& f, std::initializer_list<Substitution> rules) {
  return substitute(f, std::span<const Substitution>(rules.begin(), rules.size()));
}

MultiPoly derivative(const MultiPoly& f, Var v, unsigned k) {
  MultiPoly out;
  for (const auto& [m, c] : f.terms()) {
    const unsigned e = m.exponent(v);
    if (e < k) continue;
    ExactRational scale = c;
    for (unsigned i = 0; i < k; ++i) scale *= ExactRational(static_cast<std::int64_t>(e - i));
    Monomial reduced = m;
    reduced.set_exponent(v, e - k);
    out += MultiPoly::term(scale, reduced);
  }
  return out;
}

MultiPoly binom_poly(const MultiPoly& x, unsigned k) {
  MultiPoly out(1);
  for (unsigned i = 0; i < k; ++i) out *= x - MultiPoly(static_cast<std::int64_t>(i));
  return out / factorial(static_cast<int>(k));
}

}  // namespace gjms
