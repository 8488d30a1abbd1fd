#include "abhlab/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace abh {

QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  const int n = order;
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  // Newton iteration on P_n from a Chebyshev-like initial guess; the rule is
  // symmetric so only the lower half is computed.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int l = 1; l < n; ++l) {
        double p2 = ((2 * l + 1) * x * p1 - l * p0) / (l + 1);
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;  // guesses start near +1; store ascending
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

QuadratureRule gauss_legendre(int order, double a, double b) {
  if (!(a < b)) throw std::invalid_argument("quadrature interval requires a < b");
  QuadratureRule rule = gauss_legendre(order);
  const double mid = 0.5 * (a + b);
  const double halfw = 0.5 * (b - a);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = mid + halfw * rule.nodes[i];
    rule.weights[i] *= halfw;
  }
  return rule;
}

}  // namespace abh
