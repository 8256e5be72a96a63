#pragma once

#include <span>
#include <string>
#include <vector>

#include "shapes/polynomial.hpp"

namespace shapes {

enum class RealizationKind { HermiteOscillator, BoxOpen, BoxClosed };

// Single-particle functions replacing the formal powers t^k:
//   oscillator  H_k(x/a) exp(-x^2 / 2a^2)   (unnormalized)
//   box open    cos(k pi x / L)              on [0, L]
//   box closed  sin((k+1) pi x / L)          on [0, L]
// With the default L = pi the box functions are cos kx and sin (k+1)x.
struct Realization {
  RealizationKind kind = RealizationKind::HermiteOscillator;
  double length_scale = 1.0;

  static Realization hermite(double a = 1.0) { return {RealizationKind::HermiteOscillator, a}; }
  static Realization box_open(double length = kPi) { return {RealizationKind::BoxOpen, length}; }
  static Realization box_closed(double length = kPi) {
    return {RealizationKind::BoxClosed, length};
  }
  static constexpr double kPi = 3.14159265358979323846;
};

// "hermite", "box-open", "box-closed"; the length takes the kind's default
// when not positive.
Realization parse_realization(const std::string& name, double length_scale = 0.0);
std::string to_string(RealizationKind kind);

// phi_0 .. phi_max_k at x.
std::vector<double> orbital_values(const Realization& r, int max_k, double x);

// <phi_n|phi_m> for n, m <= max_k, row-major (max_k+1)^2, by quadrature.
std::vector<double> overlap_table(const Realization& r, int max_k);

// Realized wave function. Coordinates are particle-major:
// coords[p * d + axis].
class RealizedPolynomial {
 public:
  RealizedPolynomial(const ExactPolynomial& p, Realization r);

  int particles() const { return particles_; }
  int dimension() const { return dimension_; }
  const Realization& realization() const { return realization_; }
  double operator()(std::span<const double> coords) const;

 private:
  int particles_;
  int dimension_;
  Realization realization_;
  int max_exponent_ = 0;
  std::vector<double> coeffs_;
  std::vector<int> exponents_;  // term-major, N*d entries per term
};

RealizedPolynomial realize_polynomial(const ExactPolynomial& p, const Realization& r);

struct GridAxis {
  std::string name;
  double lo = 0;
  double hi = 0;
  int count = 1;

  double point(int i) const {
    return count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  }
};

// "x:-4:4:81,y:-4:4:81"
std::vector<GridAxis> parse_grid(const std::string& text);

// Values on a tensor grid, last axis fastest. `normalization` is the value
// the exact integral takes (N for one-particle densities, N(N-1) for pair
// densities over the full space).
struct DensityGrid {
  std::vector<GridAxis> axes;
  std::vector<double> values;
  double normalization = 0;

  std::size_t size() const { return values.size(); }
  std::vector<double> point(std::size_t flat_index) const;
  // Trapezoid rule over the grid.
  double integral() const;
};

// rho(x) = N int |Psi|^2 dx_2..dx_N / <Psi|Psi>. The grid has one axis per
// spatial dimension.
DensityGrid one_particle_density(const ExactPolynomial& p, const Realization& r,
                                 const std::vector<GridAxis>& grid, int threads = 1);

// Pair density N(N-1) int |Psi|^2 dx_3..dx_N / <Psi|Psi> along the cut
// x_1 = x * dir1, x_2 = y * dir2. The grid has two axes (x, y).
struct PairCut {
  std::vector<double> dir1;
  std::vector<double> dir2;

  static PairCut diagonal(int dimension) {
    return {std::vector<double>(dimension, 1.0), std::vector<double>(dimension, 1.0)};
  }
};

DensityGrid two_particle_density_cut(const ExactPolynomial& p, const Realization& r,
                                     const PairCut& cut, const std::vector<GridAxis>& grid,
                                     int threads = 1);

}  // namespace shapes
