#pragma once

#include <array>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <vector>

#include "shapes/deflation.hpp"
#include "shapes/polynomial.hpp"
#include "shapes/rational.hpp"
#include "shapes/realize.hpp"

namespace shapes {

// a_k with H_n H_m = sum_k a_k H_k, k = 0..n+m. Zero unless n+m+k is even
// and |n-m| <= k.
std::vector<Integer> hermite_linearization(int n, int m);

// Exact value rational * pi^pi_power.
struct PiRational {
  Rational rational;
  int pi_power = 0;
  double value() const;
};

// I_d(l) = int_0^1 (1-w^2)^((d-3)/2) w^l dw
//        = Gamma((l+1)/2) Gamma((d-1)/2) / (2 Gamma((l+d)/2)).
// Rational for odd d, rational * pi for even d. Requires d >= 2 and even l.
PiRational beta_integral(int d, int l);

// Two-body Coulomb element between products of unnormalized Hermite
// functions (oscillator length 1):
//   int Phi_n(r1) Phi_n'(r2) |r1 - r2|^-1 Phi_m(r1) Phi_m'(r2) dr1 dr2
// with n, m on particle 1 and n', m' on particle 2. The exact value is
// rational * sqrt(2) * pi^(half_pi_power / 2).
struct CoulombExact {
  Rational rational;
  int half_pi_power = 0;
  double value() const;
};

// Power of sqrt(pi) carried by every element in dimension d.
int coulomb_half_pi_power(int d);

CoulombExact two_body_element_exact(std::span<const int> n, std::span<const int> n_prime,
                                    std::span<const int> m, std::span<const int> m_prime);
double two_body_element(std::span<const int> n, std::span<const int> n_prime,
                        std::span<const int> m, std::span<const int> m_prime);

// Memoized rational parts of two_body_element_exact, safe for concurrent use.
class CoulombTable {
 public:
  explicit CoulombTable(int dimension);
  int dimension() const { return dimension_; }
  // Rational factor of the element; the irrational factor depends only on d.
  Rational element(std::span<const int> n, std::span<const int> n_prime,
                   std::span<const int> m, std::span<const int> m_prime);
  std::size_t cached_axis_polynomials() const;

 private:
  const std::vector<Rational>& axis_polynomial(int n, int np, int m, int mp);

  int dimension_;
  mutable std::shared_mutex mutex_;
  std::map<std::array<int, 4>, std::vector<Rational>> axis_cache_;
  std::vector<Rational> beta_;  // rational part of I_d(2j)
};

// <a| sum_{i<j} 1/|r_i - r_j| |b> / sqrt(<a|a><b|b>) in the oscillator
// realization, in units of 1/length_scale.
double many_body_vee(const ExactPolynomial& a, const ExactPolynomial& b, const Realization& r,
                     CoulombTable* table = nullptr);

double many_body_vee(std::span<const Rational> a, std::span<const Rational> b,
                     const LevelBasis& basis, const Realization& r,
                     CoulombTable* table = nullptr);

}  // namespace shapes
