#include <doctest.h>

#include <random>

#include "random_poly.hpp"
#include "shapes/counting.hpp"
#include "shapes/deflation.hpp"
#include "shapes/error.hpp"

using namespace shapes;

namespace {

// Coefficient vector of the determinant written with rows in the given order.
std::vector<Rational> unit(const LevelBasis& basis, std::vector<OrbitalVector> rows,
                           const Rational& scale = 1) {
  const auto c = SlaterState::canonicalize(std::move(rows), basis.statistics());
  REQUIRE(c.has_value());
  const long i = basis.index_of(c->first);
  REQUIRE(i >= 0);
  std::vector<Rational> v(basis.size(), Rational(0));
  v[i] = scale * c->second;
  return v;
}

std::vector<Rational> plus(std::vector<Rational> a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

TEST_CASE("level basis construction") {
  const LevelBasis b(3, 2, 4, Statistics::Fermion);
  CHECK(b.size() == 14);
  CHECK(b.states() == enumerate_basis(3, 2, 4, Statistics::Fermion));
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(b.index_of_leading(b.state(i).leading_monomial()) == static_cast<long>(i));
    CHECK(b.index_of(b.state(i)) == static_cast<long>(i));
    CHECK(b.leading_coefficient(i) == 1);
  }
  const LevelBasis bb(3, 1, 2, Statistics::Boson);
  // +(2),(0),(0)+ and +(1),(1),(0)+: leading coefficients 2! and 2!
  CHECK(bb.size() == 2);
  for (std::size_t i = 0; i < bb.size(); ++i) CHECK(bb.leading_coefficient(i) == 2);
  CHECK_THROWS_AS(LevelBasis(3, 3, 9, Statistics::Fermion, 1000), CapExceeded);
}

TEST_CASE("deflation reproduces the worked-example Euler states") {
  const LevelBasis l2(3, 2, 2, Statistics::Fermion);
  const LevelBasis l3(3, 2, 3, Statistics::Fermion);
  const auto g0 = expand_state(l2.state(0));
  const auto e1t = elementary_symmetric(1, 0, 3, 2);
  const auto e1u = elementary_symmetric(1, 1, 3, 2);
  // -g12 + g14 and -g13 + g15 with the determinants in written row order
  const auto expect_t = plus(unit(l3, {{1, 1}, {1, 0}, {0, 0}}, -1), unit(l3, {{2, 0}, {0, 1}, {0, 0}}));
  const auto expect_u = plus(unit(l3, {{0, 2}, {1, 0}, {0, 0}}, -1), unit(l3, {{1, 1}, {0, 1}, {0, 0}}));
  CHECK(deflate(e1t * g0, l3) == expect_t);
  CHECK(deflate(e1u * g0, l3) == expect_u);

  EulerMonomial et(3, 2);
  et.set_count(0, 1, 1);
  const std::vector<Rational> g0_coeffs{Rational(1)};
  CHECK(deflate_product(g0_coeffs, l2, et, l3) == expect_t);
  CHECK(deflate_product(g0_coeffs, l2, EulerMonomial(3, 2), l2) == g0_coeffs);
  CHECK_THROWS_AS(deflate_product(g0_coeffs, l2, EulerMonomial(3, 2), l3), InvalidArgument);
}

TEST_CASE("deflate_product equals deflate of the expanded product") {
  const LevelBasis l3(3, 2, 3, Statistics::Fermion);
  const LevelBasis l4(3, 2, 4, Statistics::Fermion);
  const auto s11 = unit(l3, {{2, 0}, {1, 0}, {0, 0}});
  EulerMonomial eu(3, 2);
  eu.set_count(1, 1, 1);
  const auto got = deflate_product(s11, l3, eu, l4);
  CHECK(materialize(got, l4) == materialize(s11, l3) * elementary_symmetric(1, 1, 3, 2));
}

TEST_CASE("property: basis states deflate to unit vectors") {
  for (auto stat : {Statistics::Fermion, Statistics::Boson})
    for (int n = 1; n <= 3; ++n)
      for (int d = 1; d <= 3; ++d)
        for (int g = 0; g <= 5; ++g) {
          const LevelBasis b(n, d, g, stat);
          for (std::size_t i = 0; i < b.size(); ++i) {
            std::vector<Rational> e(b.size(), Rational(0));
            e[i] = 1;
            CHECK(deflate(b.expansion(i), b) == e);
          }
        }
}

TEST_CASE("property: random symmetrized polynomials round trip, linearity") {
  std::mt19937 rng(2024);
  for (auto stat : {Statistics::Fermion, Statistics::Boson})
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 1 + trial % 3, d = 1 + (trial / 3) % 2;
      const int g = static_cast<int>(rng() % 7);
      const bool anti = stat == Statistics::Fermion;
      const auto p = testing_support::random_symmetrized(rng, n, d, g, anti);
      const auto r = testing_support::random_symmetrized(rng, n, d, g, anti);
      const LevelBasis b(n, d, g, stat);
      const auto cp = deflate(p, b), cr = deflate(r, b);
      CHECK(materialize(cp, b) == p);
      const Rational alpha(3, 7), beta(-2);
      auto combo = cp;
      for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = alpha * cp[i] + beta * cr[i];
      CHECK(deflate(p.scaled(alpha) + r.scaled(beta), b) == combo);
    }
}

TEST_CASE("deflation rejects polynomials outside the span") {
  const LevelBasis b(2, 1, 1, Statistics::Fermion);
  const auto t1 = ExactPolynomial::variable(2, 1, 0, 0);
  const auto t2 = ExactPolynomial::variable(2, 1, 1, 0);
  CHECK_THROWS_AS(deflate(t1 + t2, b), DeflationError);
  try {
    deflate(t1 + t2, b);
  } catch (const DeflationError& e) {
    CHECK(e.residual_leading().to_string() == "t2");
  }
  CHECK_THROWS_AS(deflate(t1 * t2 - t2 * t1 + t1 * t1, b), InvalidArgument);
  CHECK(deflate(ExactPolynomial(2, 1), b) == std::vector<Rational>(1, Rational(0)));
}
