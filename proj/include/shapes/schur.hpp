#pragma once

#include <string>
#include <vector>

#include "shapes/polynomial.hpp"
#include "shapes/slater.hpp"

namespace shapes {

// Non-increasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  // Part i (0-based), zero past the end.
  int part(int i) const { return i < length() ? parts_[i] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

// All partitions of `weight` with at most `max_parts` parts.
std::vector<Partition> partitions_of(int weight, int max_parts);

// Sum over semistandard Young tableaux of shape lambda filled from {1..N}.
// Returned as a one-axis polynomial in N particles; zero if lambda has more
// than N parts.
ExactPolynomial schur_ssyt(const Partition& lambda, int particles);

// Generalized Vandermonde divided exactly by the Vandermonde determinant.
ExactPolynomial schur_ratio(const Partition& lambda, int particles);

// For a 1D fermion state with orbitals n_1 > ... > n_N, returns lambda with
// lambda_i = n_i - (N - i), after verifying expand_state(s) equals
// schur_ssyt(lambda) * vandermonde exactly.
Partition factor_1d(const SlaterState& s);

}  // namespace shapes
