#include <gtest/gtest.h>

#include <random>

#include "gjms/mcal.hpp"
#include "oracle.hpp"

using namespace gjms;
using oracle::Q;

namespace {

Q oracle_sphere_M(int N, const Q& nu, const Q& x) {
  Q total = 0;
  for (const auto& parts : oracle::compositions(N)) {
    Q term = oracle::m_from_last(parts);
    for (int a : parts) term *= oracle::sphere_gjms(a, nu, x);
    total += term;
  }
  return total;
}

Q oracle_product_M(int N, const Q& b2, const Q& c2) {
  Q total = 0;
  for (const auto& parts : oracle::compositions(N)) {
    Q term = oracle::m_from_last(parts);
    for (int a : parts) term *= oracle::product_gjms(a, b2, c2);
    total += term;
  }
  return total;
}

}  // namespace

TEST(BuildM, OrderOneIsP2) {
  for (const auto& space : ModelSpace::all()) {
    const auto r = build_M(space, 1);
    EXPECT_EQ(r.m_operator, gjms_poly(space, 1));
    EXPECT_TRUE(r.primary_operator.is_zero());
    EXPECT_TRUE(r.primary_terms.empty());
  }
  EXPECT_THROW(build_M(ModelSpace::sphere(), 0), std::invalid_argument);
}

TEST(BuildM, PrimaryTermsAtOrderThree) {
  const auto r = primary_part(ModelSpace::sphere(), 3);
  ASSERT_EQ(r.primary_terms.size(), 3u);
  std::map<std::string, ExactRational> got;
  for (const auto& [I, c] : r.primary_terms) got[I.str()] = c;
  EXPECT_EQ(got.at("(1,2)"), ExactRational(2));
  EXPECT_EQ(got.at("(2,1)"), ExactRational(2));
  EXPECT_EQ(got.at("(1,1,1)"), ExactRational(-3));
}

TEST(BuildM, DynamicProgramMatchesEnumeration) {
  for (const auto& space : ModelSpace::all()) {
    for (int N = 1; N <= 7; ++N) {
      const auto r = build_M(space, N);
      EXPECT_EQ(r.m_operator, build_M_by_enumeration(space, N)) << space.name() << " N=" << N;
      EXPECT_EQ(r.m_operator + r.primary_operator, gjms_poly(space, N));
    }
  }
}

TEST(BuildMProperty, SphereMatchesNumericOracle) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-15, 15);
  for (int N = 1; N <= 8; ++N) {
    const MultiPoly M = build_M(ModelSpace::sphere(), N).m_operator;
    for (int trial = 0; trial < 4; ++trial) {
      const Q nu = oracle::frac(d(rng), 2), x = oracle::frac(d(rng), 3);
      const Q expected = oracle_sphere_M(N, nu, x);
      EXPECT_EQ(oracle::eval(M, {{Var::nu, nu}, {Var::x, x}}), expected);
      // closed form: N!(N-1)! P_2
      EXPECT_EQ(expected, oracle::fact(N) * oracle::fact(N - 1) * oracle::sphere_gjms(1, nu, x));
    }
  }
}

TEST(BuildMProperty, ProductMatchesNumericOracle) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> d(-15, 15);
  for (int N = 1; N <= 7; ++N) {
    const MultiPoly M = build_M(ModelSpace::pseudo_sphere(), N).m_operator;
    for (int trial = 0; trial < 4; ++trial) {
      const Q b2 = oracle::frac(d(rng), 4), c2 = oracle::frac(d(rng), 5);
      const Q expected = oracle_product_M(N, b2, c2);
      EXPECT_EQ(oracle::eval(M, {{Var::b2, b2}, {Var::c2, c2}}), expected);
      const Q scale = oracle::fact(N) * oracle::fact(N - 1);
      const Q closed = (N % 2 == 0) ? Q(scale * (oracle::frac(1, 2) - b2 - c2)) : Q(scale * (c2 - b2));
      EXPECT_EQ(expected, closed) << "N=" << N;
    }
  }
}

TEST(ClosedForm, AllSpaces) {
  for (const auto& space : ModelSpace::all()) {
    const int top = space.kind() == SpaceKind::sphere ? 10 : 8;
    for (int N = 1; N <= top; ++N) {
      const auto rep = verify_closed_form(space, N);
      EXPECT_TRUE(rep.passed()) << space.name() << " N=" << N;
      EXPECT_GT(rep.total(), 0u);
    }
  }
}

TEST(PartialSum, SphereThroughTen) {
  for (int N = 2; N <= 10; ++N) {
    for (int a = 1; a < N; ++a) EXPECT_TRUE(verify_partial_sum(a, N).passed()) << a << "," << N;
  }
}

TEST(GeneratingFunction, AllSpaces) {
  for (const auto& space : ModelSpace::all()) {
    const auto rep = verify_generating_function(space, 12);
    EXPECT_TRUE(rep.passed()) << space.name();
    EXPECT_GT(rep.total(), 0u);
  }
}

TEST(Traces, DeltaSchoutenOnSphere) {
  for (int k = 0; k <= 4; ++k) {
    const MultiPoly expected = -(MultiPoly(ExactRational(1, 2).pow(static_cast<unsigned>(k))) * var(Var::x));
    EXPECT_EQ(delta_schouten_power(ModelSpace::sphere(), k), expected) << k;
  }
}

TEST(PartialSum, RejectsOutOfRange) {
  EXPECT_THROW(verify_partial_sum(1, 1), std::invalid_argument);
  EXPECT_THROW(verify_partial_sum(4, 4), std::invalid_argument);
}
