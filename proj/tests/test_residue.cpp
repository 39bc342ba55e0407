#include <gtest/gtest.h>

#include "gjms/mcal.hpp"
#include "gjms/residue.hpp"
#include "oracle.hpp"

using namespace gjms;
using oracle::Q;

namespace {

Q sign(int k) { return k % 2 == 0 ? 1 : -1; }

// Residue polynomial at numeric nu, x, lambda by generic Lagrange interpolation.
Q oracle_residue(int n, const Q& nu, const Q& x, const Q& lambda) {
  if (n == 1) return oracle::sphere_gjms(1, nu, x);
  std::vector<Q> nodes, values;
  for (int j = 1; j <= n; ++j) {
    const Q node = -nu + 2 * n - j;
    nodes.push_back(node);
    if (j == n) {
      values.push_back(sign(n - 1) * oracle::sphere_gjms(n, nu, x));
    } else {
      values.push_back(sign(j) * oracle::sphere_gjms(j, nu, x) * oracle_residue(n - j, nu, x, node));
    }
  }
  Q total = 0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    Q basis = 1;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (k != j) basis *= (lambda - nodes[k]) / (nodes[j] - nodes[k]);
    }
    total += basis * values[j];
  }
  return total;
}

}  // namespace

TEST(Residue, OrderOneIsP2) {
  const auto r = residue_poly(ModelSpace::sphere(), 1);
  EXPECT_EQ(r.poly, gjms_poly(ModelSpace::sphere(), 1));
  EXPECT_EQ(r.order, 1);
}

TEST(Residue, OrderTwoClosedForm) {
  // P^res_4 = (lambda + nu - 3) P_4 - (lambda + nu - 2) P_2^2
  const auto s = ModelSpace::sphere();
  const MultiPoly l = var(Var::lambda) + var(Var::nu);
  const MultiPoly P2 = gjms_poly(s, 1);
  const MultiPoly P4 = gjms_poly(s, 2);
  EXPECT_EQ(residue_poly(s, 2).poly, (l - MultiPoly(3)) * P4 - (l - MultiPoly(2)) * P2 * P2);
}

TEST(Residue, NodesAndTableShape) {
  EXPECT_EQ(residue_node(ModelSpace::sphere(), 3, 2), MultiPoly(4) - var(Var::nu));
  const auto t = residue_table(ModelSpace::pseudo_sphere(), 4);
  ASSERT_EQ(t.size(), 4u);
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(t[i].order, static_cast<int>(i) + 1);
  EXPECT_THROW(residue_poly(ModelSpace::sphere(), 0), std::invalid_argument);
}

TEST(ResidueProperty, MatchesNumericLagrangeOracle) {
  for (int n = 1; n <= 5; ++n) {
    const MultiPoly R = residue_poly(ModelSpace::sphere(), n).poly;
    for (const auto& [nu, x, lambda] : {std::tuple<Q, Q, Q>{oracle::frac(7, 2), Q(-3), oracle::frac(1, 5)},
                                        {Q(5), oracle::frac(2, 3), Q(-4)},
                                        {oracle::frac(-1, 3), oracle::frac(11, 2), oracle::frac(9, 7)}}) {
      EXPECT_EQ(oracle::eval(R, {{Var::nu, nu}, {Var::x, x}, {Var::lambda, lambda}}),
                oracle_residue(n, nu, x, lambda))
          << "n=" << n;
    }
  }
}

TEST(ResidueProperty, InterpolationAndMysticOnAllSpaces) {
  for (const auto& space : ModelSpace::all()) {
    for (int N = 1; N <= 6; ++N) {
      EXPECT_TRUE(verify_residue_properties(space, N, ResidueCheck::interpolation).passed())
          << space.name() << " N=" << N;
      EXPECT_TRUE(verify_residue_properties(space, N, ResidueCheck::mystic).passed())
          << space.name() << " N=" << N;
    }
  }
}

TEST(Residue, CheckNames) {
  EXPECT_EQ(residue_check_name(ResidueCheck::interpolation), "interpolation");
  EXPECT_EQ(residue_check_name(ResidueCheck::mystic), "mystic");
}

TEST(QRes, OrderOne) {
  const auto [poly, rep] = q_res_sphere(1);
  EXPECT_EQ(poly.poly, var(Var::nu) * var(Var::lambda));
  EXPECT_TRUE(rep.passed());
}

TEST(QRes, OrderTwo) {
  // -nu (nu-1) lambda (lambda-3)
  const MultiPoly nu = var(Var::nu), l = var(Var::lambda);
  EXPECT_EQ(q_res_sphere(2).first.poly, -(nu * (nu - MultiPoly(1)) * l * (l - MultiPoly(3))));
}

TEST(QRes, CharacterisingChecksThroughSix) {
  for (int N = 1; N <= 6; ++N) {
    const auto [poly, rep] = q_res_sphere(N);
    EXPECT_TRUE(rep.passed()) << "N=" << N;
    EXPECT_EQ(poly.poly.degree(Var::lambda), static_cast<unsigned>(N));
  }
}
