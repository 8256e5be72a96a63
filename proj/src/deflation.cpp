#include "shapes/deflation.hpp"

#include "shapes/counting.hpp"
#include "shapes/error.hpp"

namespace shapes {

LevelBasis::LevelBasis(int particles, int dimension, int grade, Statistics stat,
                       std::size_t state_cap)
    : particles_(particles), dimension_(dimension), grade_(grade), stat_(stat) {
  const Integer expected = level_dimension(particles, dimension, grade, stat);
  if (expected > Integer(static_cast<unsigned long>(state_cap)))
    throw CapExceeded("level N=" + std::to_string(particles) + " d=" + std::to_string(dimension) +
                      " grade=" + std::to_string(grade) + " has " + expected.get_str() +
                      " states, above the cap of " + std::to_string(state_cap));
  states_ = enumerate_basis(particles, dimension, grade, stat);
  SHAPES_ENSURE(Integer(static_cast<unsigned long>(states_.size())) == expected,
                "basis enumeration found " + std::to_string(states_.size()) +
                    " states but the partition function predicts " + expected.get_str());
  expansions_.reserve(states_.size());
  leading_coeffs_.reserve(states_.size());
  by_leading_.reserve(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) {
    expansions_.push_back(expand_state(states_[i]));
    const auto lead = expansions_.back().leading();
    SHAPES_ENSURE(lead && lead->first == states_[i].leading_monomial(),
                  "unexpected leading monomial for " + states_[i].to_string());
    leading_coeffs_.push_back(lead->second);
    const bool unique = by_leading_.emplace(lead->first, i).second;
    SHAPES_ENSURE(unique, "two states share the leading monomial " + lead->first.to_string());
  }
}

long LevelBasis::index_of_leading(const Monomial& m) const {
  auto it = by_leading_.find(m);
  return it == by_leading_.end() ? -1 : static_cast<long>(it->second);
}

long LevelBasis::index_of(const SlaterState& s) const {
  if (s.statistics() != stat_ || s.particles() != particles_ || s.dimension() != dimension_)
    return -1;
  const long i = index_of_leading(s.leading_monomial());
  return (i >= 0 && states_[i] == s) ? i : -1;
}

std::vector<Rational> deflate(const ExactPolynomial& p, const LevelBasis& basis) {
  if (p.particles() != basis.particles() || p.dimension() != basis.dimension())
    throw InvalidArgument("polynomial and level basis differ in N or d");
  if (!p.is_zero() && p.grade() != basis.grade())
    throw InvalidArgument("polynomial is not homogeneous of grade " +
                          std::to_string(basis.grade()));
  std::vector<Rational> coeffs(basis.size());
  ExactPolynomial rem = p;
  while (!rem.is_zero()) {
    const auto [lead, c] = *rem.leading();
    const long i = basis.index_of_leading(lead);
    if (i < 0)
      throw DeflationError("polynomial is not in the span of the level's " +
                               std::string(basis.statistics() == Statistics::Fermion
                                               ? "Slater determinants"
                                               : "permanents") +
                               "; residual leading monomial " + lead.to_string(),
                           lead);
    const Rational f = c / basis.leading_coefficient(i);
    coeffs[i] += f;
    rem.add_scaled(basis.expansion(i), -f);
  }
  return coeffs;
}

ExactPolynomial materialize(std::span<const Rational> coeffs, const LevelBasis& basis) {
  if (coeffs.size() != basis.size())
    throw InvalidArgument("coefficient vector length does not match the level basis");
  ExactPolynomial p(basis.particles(), basis.dimension());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.add_scaled(basis.expansion(i), coeffs[i]);
  return p;
}

std::vector<Rational> deflate_product(std::span<const Rational> shape_coeffs,
                                      const LevelBasis& shape_basis, const EulerMonomial& euler,
                                      const LevelBasis& target) {
  if (shape_basis.grade() + euler.degree() != target.grade())
    throw InvalidArgument("shape grade plus Euler degree does not match the target level");
  return deflate(materialize(shape_coeffs, shape_basis) * euler.materialize(), target);
}

}  // namespace shapes
