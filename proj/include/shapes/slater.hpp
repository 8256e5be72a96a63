#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shapes/monomial.hpp"
#include "shapes/polynomial.hpp"
#include "shapes/statistics.hpp"

namespace shapes {

// N orbitals in descending canonical order. Fermion states have pairwise
// distinct orbitals; boson states may repeat them.
class SlaterState {
 public:
  // Orbitals must already be in canonical (descending) order.
  SlaterState(std::vector<OrbitalVector> orbitals, Statistics stat);

  // Sorts arbitrary orbitals into canonical order. Returns the permutation
  // sign picked up by the sort (always +1 for bosons), or nullopt when a
  // fermion state violates Pauli.
  static std::optional<std::pair<SlaterState, int>> canonicalize(
      std::vector<OrbitalVector> orbitals, Statistics stat);

  const std::vector<OrbitalVector>& orbitals() const { return orbitals_; }
  Statistics statistics() const { return stat_; }
  int particles() const { return static_cast<int>(orbitals_.size()); }
  int dimension() const { return orbitals_.front().dimension(); }
  int grade() const;

  // Monomial assigning orbital i to particle i; the largest monomial of the
  // expansion.
  Monomial leading_monomial() const;

  friend bool operator==(const SlaterState&, const SlaterState&) = default;

  // e.g. "|(1,0),(0,1),(0,0)|" or "+(..)+" for a permanent.
  std::string to_string() const;

 private:
  std::vector<OrbitalVector> orbitals_;
  Statistics stat_;
};

// Determinant (fermion) or permanent (boson) over all N! assignments of
// orbitals to particles; row r of the matrix is orbital r, column p is
// particle p.
ExactPolynomial expand_state(const SlaterState& s);

// e_k in the N variables of one axis; zero when k > N.
ExactPolynomial elementary_symmetric(int k, int axis, int particles, int dimension);

// e_m^k in the plethysm convention: each m-subset product raised to the
// k-th power, summed.
ExactPolynomial euler_power(int m, int k, int axis, int particles, int dimension);

// prod_{i<j} (x_i - x_j) on one axis.
ExactPolynomial vandermonde(int particles, int axis, int dimension);

// A product of Euler bosons: count(axis, m) copies of e_m on each axis.
class EulerMonomial {
 public:
  EulerMonomial(int particles, int dimension);

  int particles() const { return particles_; }
  int dimension() const { return dimension_; }
  int count(int axis, int m) const { return counts_[axis * particles_ + (m - 1)]; }
  void set_count(int axis, int m, int k);
  int degree() const;
  bool empty() const { return degree() == 0; }

  // Product of euler_power(m, count, axis) over all nonzero counts.
  ExactPolynomial materialize() const;

  friend bool operator==(const EulerMonomial&, const EulerMonomial&) = default;
  // e.g. "e1(t)^2*e2(u)"; "1" when empty.
  std::string to_string() const;

 private:
  int particles_;
  int dimension_;
  std::vector<int> counts_;
};

// Every Euler monomial with sum over (m, axis) of m * count = degree, in a
// fixed order. Degree 0 yields the single empty monomial.
std::vector<EulerMonomial> enumerate_euler_monomials(int particles, int dimension, int degree);

// Every SlaterState of exactly this grade, in descending order of leading
// monomial (which is lexicographic descending on the orbital lists).
std::vector<SlaterState> enumerate_basis(int particles, int dimension, int grade,
                                         Statistics stat);

}  // namespace shapes
