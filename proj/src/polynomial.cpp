#include "shapes/polynomial.hpp"

#include <sstream>
#include <unordered_map>

#include "shapes/error.hpp"

namespace shapes {

ExactPolynomial::ExactPolynomial(int particles, int dimension)
    : particles_(particles), dimension_(dimension) {
  Monomial probe(particles, dimension);  // validates the shape
  (void)probe;
}

ExactPolynomial ExactPolynomial::constant(int particles, int dimension, const Rational& c) {
  ExactPolynomial p(particles, dimension);
  p.add_term(Monomial(particles, dimension), c);
  return p;
}

ExactPolynomial ExactPolynomial::variable(int particles, int dimension, int particle, int axis) {
  if (particle < 0 || particle >= particles || axis < 0 || axis >= dimension)
    throw InvalidArgument("variable index out of range");
  Monomial m(particles, dimension);
  m.set_exponent(particle, axis, 1);
  return from_term(m, 1);
}

ExactPolynomial ExactPolynomial::from_term(const Monomial& m, const Rational& c) {
  ExactPolynomial p(m.particles(), m.dimension());
  p.add_term(m, c);
  return p;
}

Rational ExactPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExactPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.particles() != particles_ || m.dimension() != dimension_)
    throw InvalidArgument("monomial shape does not match polynomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::pair<Monomial, Rational>> ExactPolynomial::leading() const {
  if (terms_.empty()) return std::nullopt;
  return *terms_.rbegin();
}

bool ExactPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int g = terms_.begin()->first.grade();
  for (const auto& [m, c] : terms_) {
    if (m.grade() != g) return false;
  }
  return true;
}

std::optional<int> ExactPolynomial::grade() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.grade();
}

ExactPolynomial ExactPolynomial::scaled(const Rational& c) const {
  ExactPolynomial p(particles_, dimension_);
  if (c == 0) return p;
  for (const auto& [m, v] : terms_) p.terms_.emplace_hint(p.terms_.end(), m, v * c);
  return p;
}

ExactPolynomial ExactPolynomial::swapped_particles(int i, int j) const {
  ExactPolynomial p(particles_, dimension_);
  for (const auto& [m, v] : terms_) p.terms_.emplace(m.swapped(i, j), v);
  return p;
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& other) {
  add_scaled(other, 1);
  return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& other) {
  add_scaled(other, -1);
  return *this;
}

void ExactPolynomial::add_scaled(const ExactPolynomial& other, const Rational& c) {
  check_compatible(other);
  if (c == 0) return;
  for (const auto& [m, v] : other.terms_) add_term(m, v * c);
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  a.check_compatible(b);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  }
  ExactPolynomial p(a.particles_, a.dimension_);
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.emplace(m, std::move(c));
  }
  return p;
}

std::string ExactPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    out << (neg ? (first ? "-" : " - ") : (first ? "" : " + "));
    const bool is_const = m.grade() == 0;
    if (mag != 1 || is_const) {
      out << mag.get_str();
      if (!is_const) out << "*";
    }
    if (!is_const) out << m.to_string();
    first = false;
  }
  return out.str();
}

void ExactPolynomial::check_compatible(const ExactPolynomial& other) const {
  if (particles_ != other.particles_ || dimension_ != other.dimension_)
    throw InvalidArgument("polynomials differ in particle count or dimension");
}

ExactPolynomial multiply(const ExactPolynomial& a, const ExactPolynomial& b) { return a * b; }

ExactPolynomial add(const ExactPolynomial& a, const ExactPolynomial& b) { return a + b; }

ExactPolynomial scale(const ExactPolynomial& a, const Rational& c) { return a.scaled(c); }

ExactPolynomial divide_exact(const ExactPolynomial& numerator, const ExactPolynomial& divisor) {
  if (divisor.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (numerator.particles() != divisor.particles() ||
      numerator.dimension() != divisor.dimension())
    throw InvalidArgument("polynomials differ in particle count or dimension");
  const auto [dlead, dcoeff] = *divisor.leading();
  ExactPolynomial rem = numerator;
  ExactPolynomial quot(numerator.particles(), numerator.dimension());
  while (!rem.is_zero()) {
    const auto [lead, coeff] = *rem.leading();
    if (!lead.divisible_by(dlead))
      throw ConsistencyError("exact division left a remainder with leading term " +
                             lead.to_string());
    const Rational q = coeff / dcoeff;
    const Monomial shift = lead / dlead;
    quot.add_term(shift, q);
    for (const auto& [m, c] : divisor.terms()) rem.add_term(shift * m, -q * c);
  }
  return quot;
}

bool is_antisymmetric(const ExactPolynomial& p) {
  for (int i = 0; i < p.particles(); ++i)
    for (int j = i + 1; j < p.particles(); ++j)
      if (p.swapped_particles(i, j) != p.scaled(-1)) return false;
  return true;
}

bool is_symmetric(const ExactPolynomial& p) {
  for (int i = 0; i < p.particles(); ++i)
    for (int j = i + 1; j < p.particles(); ++j)
      if (p.swapped_particles(i, j) != p) return false;
  return true;
}

}  // namespace shapes
