#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "shapes/monomial.hpp"
#include "shapes/rational.hpp"

namespace shapes {

// Multivariate polynomial in N particles x d axes of formal variables with
// exact rational coefficients. Always fully expanded; zero terms are never
// stored. Terms iterate in ascending monomial order, so the leading term is
// the last one.
class ExactPolynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  ExactPolynomial(int particles, int dimension);

  static ExactPolynomial constant(int particles, int dimension, const Rational& c);
  // The single variable of `particle` on `axis` (0-based), e.g. t_1 or u_3.
  static ExactPolynomial variable(int particles, int dimension, int particle, int axis);
  static ExactPolynomial from_term(const Monomial& m, const Rational& c);

  int particles() const { return particles_; }
  int dimension() const { return dimension_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);
  // Largest monomial in the canonical order with its coefficient.
  std::optional<std::pair<Monomial, Rational>> leading() const;

  bool is_homogeneous() const;
  // Grade of a nonzero homogeneous polynomial.
  std::optional<int> grade() const;

  ExactPolynomial scaled(const Rational& c) const;
  // Exchange all d exponents of particles i and j in every monomial.
  ExactPolynomial swapped_particles(int i, int j) const;

  ExactPolynomial& operator+=(const ExactPolynomial& other);
  ExactPolynomial& operator-=(const ExactPolynomial& other);
  // this += c * other
  void add_scaled(const ExactPolynomial& other, const Rational& c);
  friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
  friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);

  friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

  std::string to_string() const;

 private:
  void check_compatible(const ExactPolynomial& other) const;

  int particles_;
  int dimension_;
  Terms terms_;
};

ExactPolynomial multiply(const ExactPolynomial& a, const ExactPolynomial& b);
ExactPolynomial add(const ExactPolynomial& a, const ExactPolynomial& b);
ExactPolynomial scale(const ExactPolynomial& a, const Rational& c);

// Exact multivariate division by leading-term elimination in the canonical
// monomial order. Throws ConsistencyError if the remainder is nonzero.
ExactPolynomial divide_exact(const ExactPolynomial& numerator, const ExactPolynomial& divisor);

// True iff p(particle i <-> j) == -p for every pair (fermion) or == p (boson).
bool is_antisymmetric(const ExactPolynomial& p);
bool is_symmetric(const ExactPolynomial& p);

}  // namespace shapes
