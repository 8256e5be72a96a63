#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace shapes {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" with q omitted when it is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// Scales a rational vector to coprime integers with the first nonzero entry
// positive. The zero vector is returned unchanged.
std::vector<Rational> normalize_integer_content(std::span<const Rational> v);

}  // namespace shapes
