#pragma once

#include <vector>

namespace shapes {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Hermite rule for the weight exp(-x^2) on the real line; exact for
// polynomials of degree < 2n.
QuadratureRule gauss_hermite(int n);

// Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

// Physicists' Hermite polynomials H_0..H_max at x.
std::vector<double> hermite_values(int max_degree, double x);

}  // namespace shapes
