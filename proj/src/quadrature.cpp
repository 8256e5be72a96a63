#include "shapes/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "shapes/error.hpp"

namespace shapes {

QuadratureRule gauss_hermite(int n) {
  if (n < 1) throw InvalidArgument("quadrature needs at least one node");
  constexpr double kPiM4 = 0.7511255444649425;  // pi^(-1/4)
  constexpr int kMaxIter = 100;
  QuadratureRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  double z = 0;
  for (int i = 0; i < m; ++i) {
    // Initial guesses for the largest roots, then extrapolation from the
    // previous two.
    if (i == 0)
      z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -0.16667);
    else if (i == 1)
      z -= 1.14 * std::pow(n, 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * rule.nodes[0];
    else if (i == 3)
      z = 1.91 * z - 0.91 * rule.nodes[1];
    else
      z = 2.0 * z - rule.nodes[i - 2];
    double pp = 0;
    int iter = 0;
    for (; iter < kMaxIter; ++iter) {
      // Orthonormal Hermite recurrence keeps the values O(1).
      double p1 = kPiM4, p2 = 0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt(static_cast<double>(j - 1) / j) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    SHAPES_ENSURE(iter < kMaxIter, "Gauss-Hermite root finding did not converge");
    rule.nodes[i] = z;
    rule.nodes[n - 1 - i] = -z;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / (pp * pp);
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw InvalidArgument("quadrature needs at least one node");
  QuadratureRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1, p2 = 0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-16) break;
    }
    rule.nodes[i] = mid - half * z;
    rule.nodes[n - 1 - i] = mid + half * z;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 * half / ((1 - z * z) * pp * pp);
  }
  return rule;
}

std::vector<double> hermite_values(int max_degree, double x) {
  std::vector<double> h(max_degree + 1);
  h[0] = 1.0;
  if (max_degree >= 1) h[1] = 2.0 * x;
  for (int n = 1; n < max_degree; ++n) h[n + 1] = 2.0 * x * h[n] - 2.0 * n * h[n - 1];
  return h;
}

}  // namespace shapes
