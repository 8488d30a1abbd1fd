#pragma once

#include <vector>

namespace abh {

/// One-dimensional quadrature rule: sum_i weights[i] * f(nodes[i]).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss–Legendre rule with `order` points on the reference interval [-1, 1].
/// Exact for polynomials of degree <= 2*order - 1.
QuadratureRule gauss_legendre(int order);

/// Gauss–Legendre rule mapped onto [a, b].
QuadratureRule gauss_legendre(int order, double a, double b);

}  // namespace abh
