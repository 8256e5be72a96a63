#include "shapes/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "shapes/error.hpp"

namespace shapes {

namespace {

std::optional<int> min_truncation(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

GradedQPolynomial GradedQPolynomial::monomial(int degree, Integer coeff) {
  if (degree < 0) throw InvalidArgument("negative degree in q-polynomial");
  GradedQPolynomial p;
  p.set(degree, coeff);
  return p;
}

GradedQPolynomial GradedQPolynomial::from_coefficients(int lowest,
                                                       const std::vector<Integer>& coeffs) {
  if (lowest < 0) throw InvalidArgument("negative lowest degree in q-polynomial");
  GradedQPolynomial p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.set(lowest + static_cast<int>(i), coeffs[i]);
  return p;
}

GradedQPolynomial GradedQPolynomial::geometric(int k, int truncation) {
  if (k < 1) throw InvalidArgument("geometric series needs step >= 1");
  if (truncation < 0) throw InvalidArgument("negative truncation degree");
  GradedQPolynomial p;
  for (int e = 0; e <= truncation; e += k) p.set(e, 1);
  p.truncation_ = truncation;
  return p;
}

GradedQPolynomial GradedQPolynomial::truncated(int degree) const {
  if (degree < 0) throw InvalidArgument("negative truncation degree");
  GradedQPolynomial p = *this;
  p.truncation_ = min_truncation(truncation_, degree);
  p.drop_above_truncation();
  return p;
}

Integer GradedQPolynomial::coefficient(int degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

std::optional<int> GradedQPolynomial::lowest_degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first;
}

std::optional<int> GradedQPolynomial::highest_degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

std::vector<Integer> GradedQPolynomial::coefficient_list() const {
  std::vector<Integer> out;
  if (coeffs_.empty()) return out;
  const int lo = *lowest_degree();
  const int hi = *highest_degree();
  out.reserve(hi - lo + 1);
  for (int e = lo; e <= hi; ++e) out.push_back(coefficient(e));
  return out;
}

Integer GradedQPolynomial::evaluate_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

bool GradedQPolynomial::has_nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& t) { return t.second > 0; });
}

GradedQPolynomial GradedQPolynomial::reversed() const {
  if (coeffs_.empty()) return *this;
  GradedQPolynomial r;
  r.truncation_ = truncation_;
  const int lo = *lowest_degree();
  const int hi = *highest_degree();
  for (const auto& [e, c] : coeffs_) r.set(lo + hi - e, c);
  return r;
}

bool GradedQPolynomial::is_palindromic() const { return reversed().coeffs_ == coeffs_; }

GradedQPolynomial GradedQPolynomial::pow(unsigned exponent) const {
  GradedQPolynomial result = monomial(0, 1);
  result.truncation_ = truncation_;
  result.drop_above_truncation();
  GradedQPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

GradedQPolynomial GradedQPolynomial::divide_exact(const GradedQPolynomial& divisor) const {
  if (!is_exact() || !divisor.is_exact())
    throw InvalidArgument("exact division requires exact polynomials");
  if (divisor.is_zero()) throw InvalidArgument("division by the zero q-polynomial");
  const int dlo = *divisor.lowest_degree();
  const Integer& dlead = divisor.coeffs_.at(dlo);
  GradedQPolynomial rem = *this;
  GradedQPolynomial quot;
  if (rem.is_zero()) return quot;
  const int max_quotient_degree = *highest_degree() - *divisor.highest_degree();
  // Eliminate from the lowest degree upward.
  while (!rem.is_zero()) {
    const int lo = *rem.lowest_degree();
    const Integer& c = rem.coeffs_.at(lo);
    if (lo < dlo || lo - dlo > max_quotient_degree ||
        !mpz_divisible_p(c.get_mpz_t(), dlead.get_mpz_t()))
      throw ConsistencyError("q-polynomial division left a remainder: " + to_string() + " / " +
                             divisor.to_string());
    Integer q = c / dlead;
    GradedQPolynomial step = monomial(lo - dlo, q);
    quot += step;
    rem -= step * divisor;
  }
  return quot;
}

GradedQPolynomial GradedQPolynomial::divide_exact(const Integer& divisor) const {
  if (divisor == 0) throw InvalidArgument("division of a q-polynomial by zero");
  GradedQPolynomial r;
  r.truncation_ = truncation_;
  for (const auto& [e, c] : coeffs_) {
    if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()))
      throw ConsistencyError("coefficient " + c.get_str() + " of q^" + std::to_string(e) +
                             " is not divisible by " + divisor.get_str());
    r.set(e, c / divisor);
  }
  return r;
}

GradedQPolynomial& GradedQPolynomial::operator+=(const GradedQPolynomial& other) {
  for (const auto& [e, c] : other.coeffs_) set(e, coefficient(e) + c);
  truncation_ = min_truncation(truncation_, other.truncation_);
  drop_above_truncation();
  return *this;
}

GradedQPolynomial& GradedQPolynomial::operator-=(const GradedQPolynomial& other) {
  for (const auto& [e, c] : other.coeffs_) set(e, coefficient(e) - c);
  truncation_ = min_truncation(truncation_, other.truncation_);
  drop_above_truncation();
  return *this;
}

GradedQPolynomial operator*(const GradedQPolynomial& a, const GradedQPolynomial& b) {
  GradedQPolynomial r;
  r.truncation_ = min_truncation(a.truncation_, b.truncation_);
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      const int e = ea + eb;
      if (r.truncation_ && e > *r.truncation_) break;
      r.coeffs_[e] += ca * cb;
    }
  }
  std::erase_if(r.coeffs_, [](const auto& t) { return t.second == 0; });
  return r;
}

GradedQPolynomial operator*(GradedQPolynomial a, const Integer& c) {
  if (c == 0) {
    a.coeffs_.clear();
    return a;
  }
  for (auto& [e, v] : a.coeffs_) v *= c;
  return a;
}

GradedQPolynomial GradedQPolynomial::operator-() const { return *this * Integer(-1); }

std::string GradedQPolynomial::to_string() const {
  std::ostringstream out;
  if (coeffs_.empty()) out << "0";
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Integer mag = abs(c);
    if (c < 0)
      out << "-";
    else if (!first)
      out << "+";
    if (mag != 1 || e == 0) out << mag.get_str();
    if (e >= 1) out << "q";
    if (e >= 2) out << "^" << e;
    first = false;
  }
  if (truncation_) out << "+O(q^" << (*truncation_ + 1) << ")";
  return out.str();
}

void GradedQPolynomial::set(int degree, const Integer& value) {
  if (degree < 0) throw InvalidArgument("negative degree in q-polynomial");
  if (value == 0)
    coeffs_.erase(degree);
  else
    coeffs_[degree] = value;
}

void GradedQPolynomial::drop_above_truncation() {
  if (!truncation_) return;
  coeffs_.erase(coeffs_.upper_bound(*truncation_), coeffs_.end());
}

}  // namespace shapes
