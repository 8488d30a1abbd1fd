#include "abhlab/legendre.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "abhlab/errors.hpp"
#include "abhlab/quadrature.hpp"

namespace abh {
namespace {

TEST(MapToReference, Endpoints) {
  EXPECT_DOUBLE_EQ(map_to_reference(0.0, 1.22), -1.0);
  EXPECT_DOUBLE_EQ(map_to_reference(1.22, 1.22), 1.0);
  EXPECT_DOUBLE_EQ(map_to_reference(0.61, 1.22), 0.0);
  EXPECT_THROW(map_to_reference(-0.01, 1.22), std::domain_error);
  EXPECT_THROW(map_to_reference(1.23, 1.22), std::domain_error);
}

double p2(double x) { return 0.5 * (3.0 * x * x - 1.0); }
double p3(double x) { return 0.5 * (5.0 * x * x * x - 3.0 * x); }
double p4(double x) {
  return (35.0 * std::pow(x, 4) - 30.0 * x * x + 3.0) / 8.0;
}
double p5(double x) {
  return (63.0 * std::pow(x, 5) - 70.0 * x * x * x + 15.0 * x) / 8.0;
}

TEST(LegendreEval, ClosedFormsLowOrder) {
  EXPECT_DOUBLE_EQ(legendre_eval(1, 0.3), 0.3);
  EXPECT_DOUBLE_EQ(legendre_eval(2, 0.5), -0.125);
  for (double x = -1.0; x <= 1.0 + 1e-12; x += 0.125) {
    EXPECT_NEAR(legendre_eval(2, x), p2(x), 4e-16) << "x = " << x;
    EXPECT_NEAR(legendre_eval(3, x), p3(x), 4e-16) << "x = " << x;
    EXPECT_NEAR(legendre_eval(4, x), p4(x), 8e-16) << "x = " << x;
    EXPECT_NEAR(legendre_eval(5, x), p5(x), 8e-16) << "x = " << x;
  }
}

TEST(LegendreEval, UnitValueAtRightEnd) {
  for (int l = 0; l <= 60; ++l) {
    EXPECT_DOUBLE_EQ(legendre_eval(l, 1.0), 1.0) << "l = " << l;
    EXPECT_DOUBLE_EQ(legendre_eval(l, -1.0), l % 2 == 0 ? 1.0 : -1.0)
        << "l = " << l;
  }
}

TEST(LegendreEval, OrthogonalityUnderQuadrature) {
  const QuadratureRule rule = gauss_legendre(64);
  for (int i = 0; i <= 30; ++i) {
    for (int j = i; j <= 30; ++j) {
      double acc = 0.0;
      for (size_t q = 0; q < rule.nodes.size(); ++q)
        acc += rule.weights[q] * legendre_eval(i, rule.nodes[q]) *
               legendre_eval(j, rule.nodes[q]);
      const double expected = i == j ? 2.0 / (2.0 * i + 1.0) : 0.0;
      EXPECT_NEAR(acc, expected, 1e-12 * 2.0 / (2.0 * i + 1.0))
          << "i = " << i << ", j = " << j;
    }
  }
}

TEST(LegendreD2, RigidBodyShapesVanish) {
  for (double x : {-0.9, 0.0, 0.7}) {
    EXPECT_EQ(legendre_d2(0, x), 0.0);
    EXPECT_EQ(legendre_d2(1, x), 0.0);
  }
}

TEST(LegendreD2, ClosedFormsLowOrder) {
  for (double x : {-0.8, -0.25, 0.0, 0.4, 0.95}) {
    EXPECT_NEAR(legendre_d2(2, x), 3.0, 1e-15);
    EXPECT_NEAR(legendre_d2(3, x), 15.0 * x, 1e-14);
    // P4'' = (420 x^2 - 60)/8
    EXPECT_NEAR(legendre_d2(4, x), 52.5 * x * x - 7.5, 1e-13);
  }
}

TEST(LegendreD2, MatchesFiniteDifferences) {
  // Fourth-order central stencil of legendre_eval.
  const double h = 1e-4;
  for (int l = 2; l <= 40; ++l) {
    for (double x = -0.9; x <= 0.9 + 1e-12; x += 0.15) {
      const double fd = (-legendre_eval(l, x + 2 * h) +
                         16.0 * legendre_eval(l, x + h) -
                         30.0 * legendre_eval(l, x) +
                         16.0 * legendre_eval(l, x - h) -
                         legendre_eval(l, x - 2 * h)) /
                        (12.0 * h * h);
      const double d2 = legendre_d2(l, x);
      EXPECT_NEAR(fd, d2, 1e-6 * (std::abs(d2) + 1.0))
          << "l = " << l << ", x = " << x;
    }
  }
}

TEST(LegendreD2Physical, ChainRuleScaling) {
  EXPECT_EQ(legendre_d2_physical(0, 0.3, 1.22), 0.0);
  EXPECT_EQ(legendre_d2_physical(1, 0.3, 1.22), 0.0);
  // L = 2 makes the scale factor exactly 1.
  EXPECT_NEAR(legendre_d2_physical(2, 0.5, 2.0), 3.0, 1e-15);
  // xi = 0.2 corresponds to x = 1.2 on an L = 2 beam.
  EXPECT_NEAR(legendre_d2_physical(3, 1.2, 2.0), 3.0, 1e-13);
  // Halving L quadruples curvature.
  const double ref = legendre_d2_physical(5, 0.75, 3.0);
  EXPECT_NEAR(legendre_d2_physical(5, 0.375, 1.5), 4.0 * ref,
              1e-12 * std::abs(ref));
}

TEST(BasisSet, RejectsTinyBasis) {
  EXPECT_THROW(BasisSet(3, 1.22), ConfigError);
  EXPECT_THROW(BasisSet(10, 0.0), ConfigError);
  EXPECT_NO_THROW(BasisSet(4, 1.22));
}

TEST(BasisSet, ValuesMatchPointEvaluation) {
  const BasisSet basis(12, 1.22);
  const double x = 0.87;
  const Eigen::VectorXd v = basis.values_at(x);
  ASSERT_EQ(v.size(), 12);
  for (int l = 0; l < 12; ++l) {
    EXPECT_DOUBLE_EQ(v[l], legendre_eval(l, map_to_reference(x, 1.22)));
    EXPECT_DOUBLE_EQ(basis.value(l, x), v[l]);
  }
}

TEST(BasisSet, TablesMatchPointEvaluation) {
  const BasisSet basis(17, 1.22);
  std::vector<double> x;
  for (int i = 0; i <= 40; ++i) x.push_back(1.22 * i / 40.0);
  std::vector<double> phi, d2;
  basis.tables(x, phi, d2);
  ASSERT_EQ(phi.size(), 17u * x.size());
  ASSERT_EQ(d2.size(), 17u * x.size());
  for (int l = 0; l < 17; ++l) {
    for (size_t p = 0; p < x.size(); ++p) {
      const double ref_v = basis.value(l, x[p]);
      const double ref_d2 = basis.second_derivative(l, x[p]);
      EXPECT_NEAR(phi[l * x.size() + p], ref_v,
                  1e-14 * (std::abs(ref_v) + 1.0));
      EXPECT_NEAR(d2[l * x.size() + p], ref_d2,
                  1e-12 * (std::abs(ref_d2) + 1.0));
    }
  }
}

TEST(Quadrature, ExactForPolynomials) {
  const int order = 5;
  const QuadratureRule rule = gauss_legendre(order);
  for (int k = 0; k <= 2 * order - 1; ++k) {
    double acc = 0.0;
    for (size_t q = 0; q < rule.nodes.size(); ++q)
      acc += rule.weights[q] * std::pow(rule.nodes[q], k);
    const double expected = k % 2 == 0 ? 2.0 / (k + 1) : 0.0;
    EXPECT_NEAR(acc, expected, 1e-14) << "k = " << k;
  }
}

TEST(Quadrature, NodesSymmetricAscending) {
  const QuadratureRule rule = gauss_legendre(8);
  for (size_t i = 1; i < rule.nodes.size(); ++i)
    EXPECT_LT(rule.nodes[i - 1], rule.nodes[i]);
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    EXPECT_NEAR(rule.nodes[i], -rule.nodes[rule.nodes.size() - 1 - i], 1e-15);
    EXPECT_GT(rule.weights[i], 0.0);
  }
  double total = 0.0;
  for (double w : rule.weights) total += w;
  EXPECT_NEAR(total, 2.0, 1e-14);
}

TEST(Quadrature, MappedIntervalIntegratesExactly) {
  const QuadratureRule rule = gauss_legendre(6, 0.3, 1.7);
  double acc = 0.0, total = 0.0;
  for (size_t q = 0; q < rule.nodes.size(); ++q) {
    acc += rule.weights[q] * rule.nodes[q] * rule.nodes[q];
    total += rule.weights[q];
  }
  EXPECT_NEAR(acc, (std::pow(1.7, 3) - std::pow(0.3, 3)) / 3.0, 1e-14);
  EXPECT_NEAR(total, 1.4, 1e-14);
  EXPECT_THROW(gauss_legendre(4, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(gauss_legendre(0), std::invalid_argument);
}

TEST(Quadrature, HighOrderStillAccurate) {
  // A 150-node rule must integrate a smooth non-polynomial to near machine
  // accuracy; this guards the Newton root-finding at high order.
  const QuadratureRule rule = gauss_legendre(150);
  double acc = 0.0;
  for (size_t q = 0; q < rule.nodes.size(); ++q)
    acc += rule.weights[q] * std::exp(rule.nodes[q]);
  EXPECT_NEAR(acc, std::exp(1.0) - std::exp(-1.0), 1e-13);
}

}  // namespace
}  // namespace abh
