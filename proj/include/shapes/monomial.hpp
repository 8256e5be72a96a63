#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace shapes {

// One particle's formal-power exponents, one entry per axis (node counts).
class OrbitalVector {
 public:
  OrbitalVector() = default;
  explicit OrbitalVector(std::vector<int> exponents);
  OrbitalVector(std::initializer_list<int> exponents)
      : OrbitalVector(std::vector<int>(exponents)) {}

  int dimension() const { return static_cast<int>(exponents_.size()); }
  int degree() const { return degree_; }
  int operator[](int axis) const { return exponents_[axis]; }
  const std::vector<int>& exponents() const { return exponents_; }

  friend bool operator==(const OrbitalVector&, const OrbitalVector&) = default;

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

// Total degree first, then lexicographic on the entries. This order fixes
// the sign of every determinant in the library. Throws on a dimension
// mismatch.
std::strong_ordering canonical_order(const OrbitalVector& a, const OrbitalVector& b);

inline std::strong_ordering operator<=>(const OrbitalVector& a, const OrbitalVector& b) {
  return canonical_order(a, b);
}

std::string to_string(const OrbitalVector& v);

// All orbitals of dimension d with degree <= max_degree, in descending
// canonical order.
std::vector<OrbitalVector> orbitals_up_to_degree(int dimension, int max_degree);

// N x d exponent matrix; row i holds particle i's exponents.
//
// Stored as bytes [N, d, deg_0, e_00 .. e_0(d-1), deg_1, e_10, ...] so that
// plain lexicographic comparison of the bytes is the monomial order: rows
// compared in particle order, each row by the canonical orbital order. That
// is a product of monomial orders, hence itself multiplicative.
class Monomial {
 public:
  static constexpr int kCapacity = 32;

  Monomial() = default;
  Monomial(int particles, int dimension);
  static Monomial from_rows(const std::vector<OrbitalVector>& rows);
  static Monomial from_matrix(const std::vector<std::vector<int>>& matrix, int dimension);

  int particles() const { return bytes_[0]; }
  int dimension() const { return bytes_[1]; }
  int exponent(int particle, int axis) const {
    return bytes_[2 + particle * (dimension() + 1) + 1 + axis];
  }
  int row_degree(int particle) const { return bytes_[2 + particle * (dimension() + 1)]; }
  int grade() const;
  OrbitalVector row(int particle) const;
  std::vector<std::vector<int>> matrix() const;

  void set_exponent(int particle, int axis, int value);
  // Exponent-wise division test: every entry of `divisor` <= ours.
  bool divisible_by(const Monomial& divisor) const;
  Monomial swapped(int i, int j) const;
  // Copy with particles i and j zeroed (used to group spectators).
  Monomial without_particles(int i, int j) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.bytes_ <=> b.bytes_;
  }

  std::size_t hash() const;
  // e.g. "t1^2*u2*t3"; "1" for the constant monomial.
  std::string to_string() const;

 private:
  int used_bytes() const { return 2 + particles() * (dimension() + 1); }

  std::array<std::uint8_t, kCapacity> bytes_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Variable name for an axis: t, u, v, w, then x4, x5, ...
std::string axis_name(int axis);

}  // namespace shapes
