#pragma once

#include "shapes/qseries.hpp"
#include "shapes/statistics.hpp"

namespace shapes {

// Z_E = prod_{k=1..N} 1/(1-q^k), truncated.
GradedQPolynomial euler_factor(int particles, int truncation);

// One-dimensional partition function: Z_E shifted by the ground-state grade
// N(N-1)/2 for fermions, unshifted for bosons. N = 0 gives the constant 1.
GradedQPolynomial euler_z1(int particles, int truncation,
                           Statistics stat = Statistics::Fermion);

// C^N_k(q) = (1-q^N)...(1-q^{N-k+1}) / (1-q^k), an exact polynomial.
GradedQPolynomial c_coefficient(int particles, int k);

// Shape polynomial from the recursion
//   N P(N) = sum_k s_k [C^N_k]^d P(N-k),  P(0) = P(1) = 1,
// with s_k = (-1)^{k+1} for fermions and s_k = 1 for bosons.
GradedQPolynomial shape_polynomial(int particles, int dimension, Statistics stat);

// N!^(d-1).
Integer total_shape_count(int particles, int dimension);

// Coefficient of q^grade in P_d(N,q) * Z_E^d: the number of Slater
// determinants (permanents) of that grade.
Integer level_dimension(int particles, int dimension, int grade, Statistics stat);

}  // namespace shapes
