#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "shapes/monomial.hpp"
#include "shapes/polynomial.hpp"
#include "shapes/rational.hpp"
#include "shapes/slater.hpp"

namespace shapes {

// Default cap on the number of states in one level.
inline constexpr std::size_t kDefaultStateCap = 100000;

// All Slater (permanent) states of one grade with their expansions and
// leading monomials cached. Immutable after construction.
class LevelBasis {
 public:
  LevelBasis(int particles, int dimension, int grade, Statistics stat,
             std::size_t state_cap = kDefaultStateCap);

  int particles() const { return particles_; }
  int dimension() const { return dimension_; }
  int grade() const { return grade_; }
  Statistics statistics() const { return stat_; }
  std::size_t size() const { return states_.size(); }

  const std::vector<SlaterState>& states() const { return states_; }
  const SlaterState& state(std::size_t i) const { return states_[i]; }
  const ExactPolynomial& expansion(std::size_t i) const { return expansions_[i]; }
  // Coefficient of the leading monomial in expansion(i): 1 for determinants,
  // the product of multiplicity factorials for permanents.
  const Rational& leading_coefficient(std::size_t i) const { return leading_coeffs_[i]; }

  // Index of the state whose leading monomial is m, or -1.
  long index_of_leading(const Monomial& m) const;
  // Index of a state given its orbitals, or -1.
  long index_of(const SlaterState& s) const;

 private:
  int particles_, dimension_, grade_;
  Statistics stat_;
  std::vector<SlaterState> states_;
  std::vector<ExactPolynomial> expansions_;
  std::vector<Rational> leading_coeffs_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> by_leading_;
};

// The input was not in the span of the level's states; carries the leading
// monomial of the residual.
class DeflationError : public std::runtime_error {
 public:
  DeflationError(const std::string& what, Monomial residual_leading)
      : std::runtime_error(what), residual_leading_(residual_leading) {}
  const Monomial& residual_leading() const { return residual_leading_; }

 private:
  Monomial residual_leading_;
};

// Coefficients c with sum_i c_i * expansion(i) == p, found by repeatedly
// subtracting the state that carries the current leading monomial.
std::vector<Rational> deflate(const ExactPolynomial& p, const LevelBasis& basis);

// sum_i coeffs[i] * expansion(i).
ExactPolynomial materialize(std::span<const Rational> coeffs, const LevelBasis& basis);

// deflate(materialize(shape_coeffs) * euler.materialize(), target).
std::vector<Rational> deflate_product(std::span<const Rational> shape_coeffs,
                                      const LevelBasis& shape_basis, const EulerMonomial& euler,
                                      const LevelBasis& target);

}  // namespace shapes
