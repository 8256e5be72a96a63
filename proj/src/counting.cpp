#include "shapes/counting.hpp"

#include <vector>

#include "shapes/error.hpp"

namespace shapes {

GradedQPolynomial euler_factor(int particles, int truncation) {
  if (particles < 0) throw InvalidArgument("particle count must be >= 0");
  if (truncation < 0) throw InvalidArgument("truncation degree must be >= 0");
  GradedQPolynomial z = GradedQPolynomial::monomial(0).truncated(truncation);
  for (int k = 1; k <= particles; ++k) z = z * GradedQPolynomial::geometric(k, truncation);
  return z;
}

GradedQPolynomial euler_z1(int particles, int truncation, Statistics stat) {
  GradedQPolynomial z = euler_factor(particles, truncation);
  if (stat == Statistics::Boson) return z;
  const int shift = particles * (particles - 1) / 2;
  return (GradedQPolynomial::monomial(shift) * z).truncated(truncation);
}

GradedQPolynomial c_coefficient(int particles, int k) {
  if (k < 1 || k > particles) throw InvalidArgument("c_coefficient needs 1 <= k <= N");
  auto one_minus = [](int e) {
    return GradedQPolynomial::monomial(0) - GradedQPolynomial::monomial(e);
  };
  GradedQPolynomial numerator = GradedQPolynomial::monomial(0);
  for (int j = particles - k + 1; j <= particles; ++j) numerator = numerator * one_minus(j);
  return numerator.divide_exact(one_minus(k));
}

GradedQPolynomial shape_polynomial(int particles, int dimension, Statistics stat) {
  if (particles < 0) throw InvalidArgument("particle count must be >= 0");
  if (dimension < 1) throw InvalidArgument("dimension must be >= 1");
  std::vector<GradedQPolynomial> p;
  p.reserve(particles + 1);
  p.push_back(GradedQPolynomial::monomial(0));
  if (particles >= 1) p.push_back(GradedQPolynomial::monomial(0));
  for (int n = 2; n <= particles; ++n) {
    GradedQPolynomial sum;
    for (int k = 1; k <= n; ++k) {
      GradedQPolynomial term = c_coefficient(n, k).pow(dimension) * p[n - k];
      if (stat == Statistics::Fermion && k % 2 == 0)
        sum -= term;
      else
        sum += term;
    }
    GradedQPolynomial next = sum.divide_exact(Integer(n));
    SHAPES_ENSURE(next.has_nonnegative_coefficients(),
                  "shape polynomial recursion produced a negative coefficient: " +
                      next.to_string());
    p.push_back(std::move(next));
  }
  return p[particles];
}

Integer total_shape_count(int particles, int dimension) {
  if (particles < 1) throw InvalidArgument("particle count must be >= 1");
  if (dimension < 1) throw InvalidArgument("dimension must be >= 1");
  Integer f = factorial(static_cast<unsigned>(particles));
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(dimension - 1));
  return r;
}

Integer level_dimension(int particles, int dimension, int grade, Statistics stat) {
  if (grade < 0) throw InvalidArgument("grade must be >= 0");
  GradedQPolynomial z = euler_factor(particles, grade).pow(static_cast<unsigned>(dimension));
  return (shape_polynomial(particles, dimension, stat) * z).coefficient(grade);
}

}  // namespace shapes
