#include "shapes/error.hpp"
#include "shapes/rational.hpp"
#include "shapes/statistics.hpp"

namespace shapes {

std::string to_string(Statistics s) {
  return s == Statistics::Fermion ? "fermion" : "boson";
}

Statistics parse_statistics(std::string_view name) {
  if (name == "fermion" || name == "f") return Statistics::Fermion;
  if (name == "boson" || name == "b") return Statistics::Boson;
  throw InvalidArgument("unknown statistics '" + std::string(name) +
                        "' (expected fermion or boson)");
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw InvalidArgument("malformed rational '" + text + "'");
  if (r.get_den() == 0) throw InvalidArgument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

std::vector<Rational> normalize_integer_content(std::span<const Rational> v) {
  std::vector<Rational> out(v.begin(), v.end());
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  const Rational* first = nullptr;
  for (const auto& x : v) {
    if (x == 0) continue;
    if (!first) first = &x;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
  }
  if (!first) return out;
  Rational scale(den_lcm, num_gcd);
  if (*first < 0) scale = -scale;
  for (auto& x : out) x *= scale;
  return out;
}

}  // namespace shapes
