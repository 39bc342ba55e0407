#pragma once

// Independent reference computations for the test suites. Arithmetic is plain
// GMP rationals; nothing here calls into the library under test.

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <vector>

#include "gjms/poly.hpp"

namespace gjms {

inline void PrintTo(const MultiPoly& f, std::ostream* os) { *os << f.str(); }
inline void PrintTo(const ExactRational& r, std::ostream* os) { *os << r.str(); }

}  // namespace gjms

namespace oracle {

using Q = mpq_class;

/// a/b in canonical form.
inline Q frac(long a, long b) {
  Q r(a, b);
  r.canonicalize();
  return r;
}

inline Q fact(int n) {
  Q r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Q choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  return fact(n) / (fact(k) * fact(n - k));
}

/// Compositions of N from the N-1 cut points, as bit masks.
inline std::vector<std::vector<int>> compositions(int N) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << (N - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < N - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(parts);
  }
  return out;
}

/// m_I peeled from the last part: m_(K,b,a) = -1/(a+b) C(N,a)^2 a(N-a)/N m_(K,b).
inline Q m_from_last(std::vector<int> I) {
  Q m = 1;
  while (I.size() > 1) {
    int N = 0;
    for (int v : I) N += v;
    const int a = I.back();
    const int b = I[I.size() - 2];
    m *= -choose(N, a) * choose(N, a) * a * (N - a) / (Q(N) * (a + b));
    I.pop_back();
  }
  return m;
}

/// Sphere GJMS operator at numeric nu and x.
inline Q sphere_gjms(int N, const Q& nu, const Q& x) {
  Q r = 1;
  for (int i = 0; i < N; ++i) r *= x - (nu + i) * (nu - 1 - i);
  return r;
}

/// Product-space GJMS operator at numeric b2 and c2.
inline Q product_gjms(int N, const Q& b2, const Q& c2) {
  Q r = (N % 2 == 1) ? Q(c2 - b2) : Q(1);
  for (int j = 1; j <= N / 2; ++j) {
    const Q k = (N % 2 == 1) ? Q(2 * j) : Q(2 * j - 1);
    r *= (b2 - c2) * (b2 - c2) - 2 * k * k * (b2 + c2) + k * k * k * k;
  }
  return r;
}

/// Evaluates a library polynomial at rational points.
inline Q eval(const gjms::MultiPoly& f, const std::map<gjms::Var, Q>& at) {
  Q total = 0;
  for (const auto& [m, c] : f.terms()) {
    Q term = c.raw();
    for (gjms::Var v : gjms::all_vars()) {
      const unsigned e = m.exponent(v);
      if (e == 0) continue;
      auto it = at.find(v);
      if (it == at.end()) throw std::out_of_range("oracle::eval: unassigned variable");
      Q p = 1;
      for (unsigned i = 0; i < e; ++i) p *= it->second;
      term *= p;
    }
    total += term;
  }
  return total;
}

}  // namespace oracle
