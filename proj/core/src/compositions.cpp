#include "gjms/compositions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace gjms {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Composition: empty");
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("Composition: parts must be positive");
    size_ += p;
  }
}

Composition Composition::reversed() const {
  return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

Composition Composition::prefix(std::size_t n) const {
  return Composition(std::vector<int>(parts_.begin(), parts_.begin() + static_cast<long>(n)));
}

Composition Composition::suffix(std::size_t from) const {
  return Composition(std::vector<int>(parts_.begin() + static_cast<long>(from), parts_.end()));
}

Composition Composition::concat(const Composition& tail) const {
  std::vector<int> out = parts_;
  out.insert(out.end(), tail.parts_.begin(), tail.parts_.end());
  return Composition(std::move(out));
}

std::string Composition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ')';
}

namespace {

void enumerate_into(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
  for (int first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    if (first == remaining) {
      out.emplace_back(prefix);
    } else {
      enumerate_into(remaining - first, prefix, out);
    }
    prefix.pop_back();
  }
}

std::string params_of(int N) { return "N=" + std::to_string(N); }

std::string params_of(const Composition& I) { return "I=" + I.str(); }

ExactRational rat(long v) { return ExactRational(static_cast<std::int64_t>(v)); }

bool check(VerificationReport& rep, const std::string& id, const std::string& ref,
           const std::string& params, const ExactRational& lhs, const ExactRational& rhs) {
  return rep.expect_true(id, ref, params, lhs == rhs,
                         "lhs=" + lhs.str() + " rhs=" + rhs.str());
}

void verify_sum_zero(VerificationReport& rep, int N) {
  if (N < 2) {
    rep.note("sum_zero: skipped N=" + std::to_string(N) + " (needs N >= 2)");
    return;
  }
  ExactRational total;
  ExactRational primary;
  for (const auto& I : enumerate_compositions(N)) {
    const ExactRational m = m_coefficient(I);
    total += m;
    if (I.length() > 1) primary += m;
  }
  check(rep, "sum_zero", "sum over |I|=N of m_I = 0", params_of(N), total, 0);
  check(rep, "primary_sum", "sum over |I|=N, I != (N) of m_I = -1", params_of(N), primary, -1);
}

void verify_strong(VerificationReport& rep, int N) {
  std::vector<ExactRational> by_first(static_cast<std::size_t>(N) + 1);
  for (const auto& I : enumerate_compositions(N)) {
    const ExactRational m = m_coefficient(I);
    by_first[static_cast<std::size_t>(I.first())] += m;
    check(rep, "recursion", "closed form m_I equals first-part recursion", params_of(I), m,
          m_coefficient_recursive(I));
  }
  for (int a = 1; a <= N; ++a) {
    check(rep, "strong", "sum over J of m_(a,J) = (-1)^(N-a) C(N-1,a-1)",
          params_of(N) + " a=" + std::to_string(a), by_first[static_cast<std::size_t>(a)],
          sign_power(N - a) * binomial(N - 1, a - 1));
  }
}

void verify_reversal(VerificationReport& rep, int N) {
  const auto all = enumerate_compositions(N);
  std::vector<std::size_t> by_length(static_cast<std::size_t>(N) + 1, 0);
  std::size_t non_integral = 0;
  for (const auto& I : all) {
    const ExactRational m = m_coefficient(I);
    ++by_length[I.length()];
    if (!m.is_integer()) ++non_integral;
    check(rep, "reversal", "m_I = m_(reversed I)", params_of(I), m, m_coefficient(I.reversed()));
    if (I.length() == 2) {
      check(rep, "m_double", "m_(a,b) = -C(N-1,a) C(N-1,b)", params_of(I), m,
            -(binomial(N - 1, I[0]) * binomial(N - 1, I[1])));
    }
  }
  rep.expect_true("count", "number of compositions of N is 2^(N-1)", params_of(N),
                  all.size() == (std::size_t{1} << (N - 1)),
                  "count=" + std::to_string(all.size()));
  for (int r = 1; r <= N; ++r) {
    const ExactRational expected = binomial(N - 1, r - 1);
    const ExactRational got = rat(static_cast<long>(by_length[static_cast<std::size_t>(r)]));
    check(rep, "count_by_length", "compositions of N with r parts number C(N-1,r-1)",
          params_of(N) + " r=" + std::to_string(r), got, expected);
  }
  rep.note("integrality N=" + std::to_string(N) + ": " +
           (non_integral == 0 ? std::string("all m_I integral")
                              : std::to_string(non_integral) + " non-integral m_I"));
}

// Prefix sums S_s = I_1 + ... + I_s.
std::vector<int> prefix_sums(const Composition& I) {
  std::vector<int> s(I.length());
  std::partial_sum(I.parts().begin(), I.parts().end(), s.begin());
  return s;
}

void verify_variation(VerificationReport& rep, int N) {
  for (const auto& I : enumerate_compositions(N)) {
    const std::size_t r = I.length();
    if (r < 2) continue;
    const ExactRational m = m_coefficient(I);
    const auto S = prefix_sums(I);

    ExactRational last_rhs;
    ExactRational first_rhs;
    for (std::size_t s = 1; s < r; ++s) {
      const int Ss = S[s - 1];
      const int Ts = N - Ss;
      const ExactRational split = m_coefficient(I.prefix(s)) * m_coefficient(I.suffix(s));
      last_rhs += binomial(N - 1, Ss - 1).pow(2) * rat(N - Ss) * split;
      first_rhs += binomial(N - 1, Ts - 1).pow(2) * rat(N - Ts) * split;

      const ExactRational middle =
          (binomial(N - 1, Ss - 1).pow(2) * rat(N - Ss) + binomial(N - 1, N - Ss - 1).pow(2) * rat(Ss)) *
          split;
      check(rep, "middle_term",
            "-(I_a+I_(a+1)) m_I = [C(N-1,S-1)^2 (N-S) + C(N-1,N-S-1)^2 S] m_prefix m_suffix",
            params_of(I) + " a=" + std::to_string(s), -rat(I[s - 1] + I[s]) * m, middle);
    }
    check(rep, "c_last", "-(N-I_r) m_I = sum_s C(N-1,S_s-1)^2 (N-S_s) m_prefix m_suffix",
          params_of(I), -rat(N - I.last()) * m, last_rhs);
    check(rep, "c_first", "-(N-I_1) m_I = sum_s C(N-1,T_s-1)^2 (N-T_s) m_prefix m_suffix",
          params_of(I), -rat(N - I.first()) * m, first_rhs);
  }
  for (int j = 1; j < N; ++j) {
    check(rep, "c_product", "C(N-1,j-1)^2 (N-j) c_j c_(N-j) = c_N j/(2N)",
          params_of(N) + " j=" + std::to_string(j),
          binomial(N - 1, j - 1).pow(2) * rat(N - j) * c_coefficient(j) * c_coefficient(N - j),
          c_coefficient(N) * rat(j) / rat(2L * N));
  }
}

ExactRational beta_sum(int M, int N) {
  ExactRational s;
  for (int j = 0; j <= N; ++j) s += sign_power(j) * binomial(N, j) / rat(j + M);
  return s;
}

void verify_beta_kernel(VerificationReport& rep, int N) {
  auto beta = [&](int M, int K) {
    check(rep, "beta", "sum_j (-1)^j C(N,j)/(j+M) = (M-1)! N!/(M+N)!",
          "M=" + std::to_string(M) + " N=" + std::to_string(K), beta_sum(M, K),
          factorial(M - 1) * factorial(K) / factorial(M + K));
  };
  for (int M = 1; M <= N; ++M) beta(M, N);
  for (int M = 1; M < N; ++M) beta(N, M);

  for (int a = 1; a < N; ++a) {
    const ExactRational weight = binomial(N, a).pow(2) * rat(a) * rat(N - a) / rat(N);
    ExactRational inner;
    for (int b = 1; b <= N - a; ++b) inner += sign_power(b) * binomial(N - a - 1, b - 1) / rat(a + b);
    const std::string params = params_of(N) + " a=" + std::to_string(a);
    check(rep, "kernel", "-C(N-1,a-1) = C(N,a)^2 a(N-a)/N sum_b (-1)^b C(N-a-1,b-1)/(a+b)",
          params, -binomial(N - 1, a - 1), weight * inner);
    check(rep, "kernel_ratio", "C(N-1,a-1) / (C(N,a)^2 a(N-a)/N) = a!(N-a-1)!/N!", params,
          binomial(N - 1, a - 1) / weight, factorial(a) * factorial(N - a - 1) / factorial(N));
  }
}

void verify_divergence_cancel(VerificationReport& rep, int N) {
  auto weight = [N](int c) { return rat(c) * rat(N - c) / rat(N) * binomial(N, c).pow(2); };
  auto m2 = [](int a, int b) { return m_coefficient(Composition({a, b})); };

  for (int p = 1; p < N; ++p) {
    const int q = N - p;
    const ExactRational value =
        rat(-2) * (rat(N - p) * m2(p, q) + rat(N - q) * m2(q, p)) - (weight(p) + weight(q));
    check(rep, "two_part", "-2((N-p) m_(p,q) + (N-q) m_(q,p)) - weighted binomials = 0",
          "I=(" + std::to_string(p) + "," + std::to_string(q) + ")", value, 0);
  }

  for (const auto& I : enumerate_compositions(N)) {
    if (I.length() != 3) continue;
    const int i = I[0];
    const int j = I[1];
    const int k = I[2];
    check(rep, "three_part", "m_(i,j,k) = -C(N,k)^2 k(N-k)/N m_(j,i)/(N-i)", params_of(I),
          m_coefficient(I), -weight(k) * m2(j, i) / rat(N - i));

    ExactRational first_sum;
    // all 3! orderings of positions, with multiplicity for repeated parts
    std::array<int, 3> idx = {0, 1, 2};
    do {
      const int x = I[static_cast<std::size_t>(idx[0])];
      const int y = I[static_cast<std::size_t>(idx[1])];
      const int z = I[static_cast<std::size_t>(idx[2])];
      first_sum += m_coefficient(Composition({x, y, z})) / rat(N - z);
    } while (std::next_permutation(idx.begin(), idx.end()));
    first_sum *= rat(-2) * rat(N - i) * rat(N - j) * rat(N - k);

    ExactRational second_sum;
    for (int pos = 0; pos < 3; ++pos) {
      const int c = I[static_cast<std::size_t>(pos)];
      const int a = I[static_cast<std::size_t>((pos + 1) % 3)];
      const int b = I[static_cast<std::size_t>((pos + 2) % 3)];
      second_sum += rat(2) * weight(c) * (m2(a, b) * rat(N - a) + m2(b, a) * rat(N - b));
    }
    check(rep, "six_term", "six-term sum over S_3 cancels against pair terms", params_of(I),
          first_sum, second_sum);
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int N) {
  if (N < 1) throw std::invalid_argument("enumerate_compositions: N must be >= 1");
  std::vector<Composition> out;
  out.reserve(std::size_t{1} << std::min(N - 1, 30));
  std::vector<int> prefix;
  enumerate_into(N, prefix, out);
  return out;
}

ExactRational m_coefficient(const Composition& I) {
  const int N = I.size();
  const std::size_t r = I.length();
  ExactRational m = factorial(N) * factorial(N - 1);
  if (r % 2 == 0) m = -m;  // -(-1)^r
  for (std::size_t j = 0; j < r; ++j) m /= factorial(I[j]) * factorial(I[j] - 1);
  for (std::size_t j = 0; j + 1 < r; ++j) m /= rat(I[j] + I[j + 1]);
  return m;
}

ExactRational m_coefficient_recursive(const Composition& I) {
  ExactRational m(1);
  for (std::size_t s = 0; s + 1 < I.length(); ++s) {
    int N = 0;
    for (std::size_t t = s; t < I.length(); ++t) N += I[t];
    const int a = I[s];
    const int b = I[s + 1];
    m *= -binomial(N, a).pow(2) * rat(a) * rat(N - a) / (rat(N) * rat(a + b));
  }
  return m;
}

ExactRational c_coefficient(int N) {
  return ExactRational(2).pow(static_cast<unsigned>(N - 1)) * factorial(N) * factorial(N - 1);
}

const MultiPoly& CompositionSum::tail(int rem, int last) {
  const auto key = std::make_pair(rem, last);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  MultiPoly acc;
  if (rem == 0) {
    acc = MultiPoly(1);
  } else {
    for (int a = 1; a <= rem; ++a) acc += part(a) * tail(rem - a, a) / rat(last + a);
  }
  return memo_.emplace(key, std::move(acc)).first->second;
}

MultiPoly CompositionSum::part(int a) const {
  if (a < 1 || static_cast<std::size_t>(a) >= values_.size()) {
    throw std::out_of_range("CompositionSum: part outside the value table");
  }
  return -values_[static_cast<std::size_t>(a)] / (factorial(a) * factorial(a - 1));
}

MultiPoly CompositionSum::full(int N) {
  MultiPoly inner;
  for (int a = 1; a <= N; ++a) inner += part(a) * tail(N - a, a);
  return inner * MultiPoly(-(factorial(N) * factorial(N - 1)));
}

ExactRational CoefficientTable::at(const Composition& I) const {
  for (const auto& [J, m] : entries) {
    if (J == I) return m;
  }
  throw std::out_of_range("CoefficientTable: composition " + I.str() + " not present");
}

bool CoefficientTable::all_integral() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const auto& e) { return e.second.is_integer(); });
}

CoefficientTable coefficient_table(int N) {
  CoefficientTable t;
  t.order = N;
  for (auto& I : enumerate_compositions(N)) {
    ExactRational m = m_coefficient(I);
    t.entries.emplace_back(std::move(I), std::move(m));
  }
  return t;
}

std::string_view identity_name(CoefficientIdentity kind) {
  switch (kind) {
    case CoefficientIdentity::sum_zero: return "sum_zero";
    case CoefficientIdentity::strong: return "strong";
    case CoefficientIdentity::reversal: return "reversal";
    case CoefficientIdentity::variation: return "variation";
    case CoefficientIdentity::beta_kernel: return "beta_kernel";
    case CoefficientIdentity::divergence_cancel: return "divergence_cancel";
  }
  return "unknown";
}

VerificationReport verify_coefficient_identity(CoefficientIdentity kind, int N) {
  if (N < 1) throw std::invalid_argument("verify_coefficient_identity: N must be >= 1");
  VerificationReport rep;
  rep.suite = std::string(identity_name(kind));
  switch (kind) {
    case CoefficientIdentity::sum_zero: verify_sum_zero(rep, N); break;
    case CoefficientIdentity::strong: verify_strong(rep, N); break;
    case CoefficientIdentity::reversal: verify_reversal(rep, N); break;
    case CoefficientIdentity::variation: verify_variation(rep, N); break;
    case CoefficientIdentity::beta_kernel: verify_beta_kernel(rep, N); break;
    case CoefficientIdentity::divergence_cancel: verify_divergence_cancel(rep, N); break;
  }
  return rep;
}

}  // namespace gjms
