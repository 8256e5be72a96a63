#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shapes/rational.hpp"

namespace shapes {

// Integer polynomial, or truncated power series, in the grading variable q.
// A truncated series only knows its coefficients up to truncation()
// inclusive; anything above is dropped on construction and on every
// arithmetic result.
class GradedQPolynomial {
 public:
  GradedQPolynomial() = default;

  static GradedQPolynomial monomial(int degree, Integer coeff = 1);
  static GradedQPolynomial from_coefficients(int lowest, const std::vector<Integer>& coeffs);
  // 1 + q^k + q^{2k} + ... up to degree `truncation`.
  static GradedQPolynomial geometric(int k, int truncation);

  std::optional<int> truncation() const { return truncation_; }
  bool is_exact() const { return !truncation_.has_value(); }
  GradedQPolynomial truncated(int degree) const;

  bool is_zero() const { return coeffs_.empty(); }
  Integer coefficient(int degree) const;
  const std::map<int, Integer>& terms() const { return coeffs_; }
  std::optional<int> lowest_degree() const;
  std::optional<int> highest_degree() const;

  // Dense list from lowest to highest nonzero degree (empty for zero).
  std::vector<Integer> coefficient_list() const;
  Integer evaluate_at_one() const;
  bool has_nonnegative_coefficients() const;

  // Coefficient list reversed between lowest and highest nonzero degree,
  // keeping the lowest degree in place.
  GradedQPolynomial reversed() const;
  bool is_palindromic() const;

  GradedQPolynomial pow(unsigned exponent) const;
  // Exact polynomial division; throws ConsistencyError on a nonzero remainder.
  GradedQPolynomial divide_exact(const GradedQPolynomial& divisor) const;
  // Coefficient-wise exact division by an integer.
  GradedQPolynomial divide_exact(const Integer& divisor) const;

  GradedQPolynomial& operator+=(const GradedQPolynomial& other);
  GradedQPolynomial& operator-=(const GradedQPolynomial& other);
  friend GradedQPolynomial operator+(GradedQPolynomial a, const GradedQPolynomial& b) { return a += b; }
  friend GradedQPolynomial operator-(GradedQPolynomial a, const GradedQPolynomial& b) { return a -= b; }
  friend GradedQPolynomial operator*(const GradedQPolynomial& a, const GradedQPolynomial& b);
  friend GradedQPolynomial operator*(GradedQPolynomial a, const Integer& c);
  GradedQPolynomial operator-() const;

  friend bool operator==(const GradedQPolynomial& a, const GradedQPolynomial& b) {
    return a.coeffs_ == b.coeffs_ && a.truncation_ == b.truncation_;
  }

  // Ascending powers, e.g. "q^2+4q^3+q^4"; zero prints as "0".
  std::string to_string() const;

 private:
  void set(int degree, const Integer& value);
  void drop_above_truncation();

  std::map<int, Integer> coeffs_;
  std::optional<int> truncation_;
};

}  // namespace shapes
