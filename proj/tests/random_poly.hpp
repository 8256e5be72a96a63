#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "shapes/polynomial.hpp"

namespace testing_support {

// Random homogeneous polynomial of the given grade with a few terms and
// small rational coefficients, then (anti)symmetrized over all particle
// permutations.
inline shapes::ExactPolynomial random_symmetrized(std::mt19937& rng, int n, int d, int grade,
                                                  bool antisymmetric, int terms = 3) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), slot(0, n * d - 1);
  shapes::ExactPolynomial seed(n, d);
  for (int t = 0; t < terms; ++t) {
    shapes::Monomial m(n, d);
    for (int k = 0; k < grade; ++k) {
      const int s = slot(rng);
      m.set_exponent(s / d, s % d, m.exponent(s / d, s % d) + 1);
    }
    shapes::Rational c(num(rng), den(rng));
    c.canonicalize();
    seed.add_term(m, c);
  }
  shapes::ExactPolynomial out(n, d);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    const int sign = (antisymmetric && inversions % 2) ? -1 : 1;
    for (const auto& [m, c] : seed.terms()) {
      shapes::Monomial q(n, d);
      for (int p = 0; p < n; ++p)
        for (int a = 0; a < d; ++a) q.set_exponent(perm[p], a, m.exponent(p, a));
      out.add_term(q, c * sign);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace testing_support
