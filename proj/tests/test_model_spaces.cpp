#include <gtest/gtest.h>

#include <random>

#include "gjms/model_space.hpp"
#include "oracle.hpp"

using namespace gjms;
using oracle::Q;

TEST(ModelSpace, NamesRoundTrip) {
  for (const auto& s : ModelSpace::all()) {
    auto parsed = ModelSpace::parse(s.name());
    ASSERT_TRUE(parsed.has_value());
    EXPECT_EQ(*parsed, s);
  }
  EXPECT_FALSE(ModelSpace::parse("torus").has_value());
  EXPECT_EQ(ModelSpace::all().size(), 4u);
}

TEST(ModelSpace, OperatorSymbols) {
  EXPECT_EQ(ModelSpace::sphere().operator_vars().size(), 1u);
  EXPECT_EQ(ModelSpace::pseudo_sphere().operator_vars().size(), 2u);
  EXPECT_TRUE(ModelSpace::sphere_hyperbolic().is_product());
  EXPECT_FALSE(ModelSpace::einstein().is_product());
}

TEST(Gjms, SphereLowOrders) {
  const auto s = ModelSpace::sphere();
  const MultiPoly nu = var(Var::nu);
  const MultiPoly x = var(Var::x);
  EXPECT_EQ(gjms_poly(s, 1), x - nu * (nu - MultiPoly(1)));
  EXPECT_EQ(gjms_poly(s, 2), gjms_poly(s, 1) * (x - (nu + MultiPoly(1)) * (nu - MultiPoly(2))));
  EXPECT_THROW(gjms_poly(s, 0), std::invalid_argument);
}

TEST(Gjms, TableStartsAtIdentity) {
  const auto t = gjms_table(ModelSpace::einstein(), 3);
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t[0], MultiPoly(1));
  EXPECT_EQ(gjms::gjms(ModelSpace::einstein(), 3).operator_degree(), 3);
  EXPECT_EQ(gjms::gjms(ModelSpace::pseudo_sphere(), 3).operator_degree(), 3);
}

TEST(GjmsProperty, SphereAgreesWithNumericOracle) {
  std::mt19937 rng(20261017);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int N = 1; N <= 8; ++N) {
    const MultiPoly P = gjms_poly(ModelSpace::sphere(), N);
    for (int trial = 0; trial < 5; ++trial) {
      const Q nu = oracle::frac(d(rng), 3), x = oracle::frac(d(rng), 7);
      EXPECT_EQ(oracle::eval(P, {{Var::nu, nu}, {Var::x, x}}), oracle::sphere_gjms(N, nu, x)) << N;
    }
  }
}

TEST(GjmsProperty, ProductAgreesWithNumericOracle) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-30, 30);
  for (const auto& space : {ModelSpace::pseudo_sphere(), ModelSpace::sphere_hyperbolic()}) {
    for (int N = 1; N <= 8; ++N) {
      const MultiPoly P = gjms_poly(space, N);
      for (int trial = 0; trial < 5; ++trial) {
        const Q b2 = oracle::frac(d(rng), 5), c2 = oracle::frac(d(rng), 3);
        EXPECT_EQ(oracle::eval(P, {{Var::b2, b2}, {Var::c2, c2}}), oracle::product_gjms(N, b2, c2));
      }
    }
  }
}

TEST(GjmsProperty, ConstantActionIsQCurvature) {
  // P_2N(1) = (-1)^N (nu - N) Q_2N on every model space
  for (int N = 1; N <= 7; ++N) {
    for (int nu2 = 3; nu2 <= 21; nu2 += 2) {
      const Q nu = oracle::frac(nu2, 2);
      const Q sign = (N % 2 == 0) ? 1 : -1;
      const Q q = oracle::eval(q_value(ModelSpace::sphere(), N), {{Var::nu, nu}});
      EXPECT_EQ(oracle::sphere_gjms(N, nu, 0), sign * (nu - N) * q);
    }
    for (int qd = 1; qd <= 7; ++qd) {
      for (int pd = 1; pd <= 7; ++pd) {
        const Q b2 = oracle::frac(qd - 1, 2) * oracle::frac(qd - 1, 2);
        const Q c2 = oracle::frac(pd - 1, 2) * oracle::frac(pd - 1, 2);
        const Q nu = oracle::frac(qd + pd, 2);
        const Q sign = (N % 2 == 0) ? 1 : -1;
        const Q q = oracle::eval(q_value(ModelSpace::pseudo_sphere(), N), {{Var::q, qd}, {Var::p, pd}});
        EXPECT_EQ(oracle::product_gjms(N, b2, c2), sign * (nu - N) * q) << N << " " << qd << " " << pd;
      }
    }
  }
}

TEST(QValue, SphereExamples) {
  const MultiPoly nu = var(Var::nu);
  EXPECT_EQ(q_value(ModelSpace::sphere(), 1), nu);
  EXPECT_EQ(q_value(ModelSpace::sphere(), 2), nu * (nu * nu - MultiPoly(1)));
  EXPECT_EQ(q_value(ModelSpace::einstein(), 2), nu * (nu * nu - MultiPoly(1)) * var(Var::c).pow(2));
}

TEST(QValue, ProductSpacesOrderOne) {
  // Q_2 = (q - p)/2
  const MultiPoly expected = (var(Var::q) - var(Var::p)) * ExactRational(1, 2);
  EXPECT_EQ(q_value(ModelSpace::pseudo_sphere(), 1), expected);
  EXPECT_EQ(q_value(ModelSpace::sphere_hyperbolic(), 1), expected);
}

TEST(Schouten, TracesOnSphere) {
  const auto s = ModelSpace::sphere();
  const MultiPoly nu = var(Var::nu);
  EXPECT_EQ(schouten_power_sum(s, 1), nu);
  EXPECT_EQ(schouten_power_sum(s, 2), nu * ExactRational(1, 2));
  const auto e = schouten_elementary(s, 2);
  EXPECT_EQ(e[0], MultiPoly(1));
  EXPECT_EQ(e[1], nu);
  // e_2 = C(2nu, 2) / 4
  EXPECT_EQ(e[2], nu * (nu * MultiPoly(2) - MultiPoly(1)) * ExactRational(1, 4));
}

TEST(Schouten, ProductSpectrum) {
  const auto s = ModelSpace::pseudo_sphere();
  EXPECT_EQ(schouten_power_sum(s, 1), (var(Var::q) - var(Var::p)) * ExactRational(1, 2));
  EXPECT_EQ(schouten_power_sum(s, 2), (var(Var::q) + var(Var::p)) * ExactRational(1, 4));
}

TEST(ExpandProduct, SmallestCase) {
  const auto terms = expand_product(ModelSpace::sphere(), 1, 1);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].order, 2);
  EXPECT_EQ(terms[0].coefficient, ExactRational(1));
  EXPECT_EQ(terms[1].order, 1);
  EXPECT_EQ(terms[1].coefficient, ExactRational(-2));
}

TEST(ExpandProduct, EinsteinCarriesScale) {
  const auto terms = expand_product(ModelSpace::einstein(), 2, 1);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[1].c_power, 1u);
  EXPECT_EQ(terms[1].coefficient, ExactRational(-6));
}

TEST(ExpandProduct, RejectsProductsAndNegativeOrders) {
  EXPECT_THROW(expand_product(ModelSpace::pseudo_sphere(), 1, 1), std::invalid_argument);
  EXPECT_THROW(expand_product(ModelSpace::sphere(), -1, 1), std::invalid_argument);
}

TEST(ExpandProductProperty, HoldsForAllSmallOrders) {
  for (const auto& space : {ModelSpace::sphere(), ModelSpace::einstein()}) {
    for (int A = 0; A <= 6; ++A) {
      for (int B = 0; B <= 6; ++B) {
        EXPECT_TRUE(verify_expand_product(space, A, B).passed()) << A << "," << B;
      }
    }
  }
}

TEST(Restriction, SymbolicAndCritical) {
  for (int N = 1; N <= 6; ++N) EXPECT_TRUE(verify_restriction(N).passed()) << N;
  for (int q = 1; q <= 7; ++q) {
    for (int p = 1; p <= 7; ++p) {
      if ((q + p) % 2 != 0) continue;
      const auto rep = verify_restriction_roots(q, p);
      EXPECT_TRUE(rep.passed()) << q << "," << p;
      EXPECT_GT(rep.total(), 0u);
    }
  }
}

TEST(ModelSpaceChecks, AllSpacesThroughOrderSix) {
  for (const auto& space : ModelSpace::all()) {
    for (int N = 1; N <= 6; ++N) {
      EXPECT_TRUE(verify_model_space(space, N).passed()) << space.name() << " N=" << N;
    }
  }
}
