#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "shapes/deflation.hpp"
#include "shapes/error.hpp"
#include "shapes/schur.hpp"
#include "shapes/slater.hpp"

using namespace shapes;

namespace {

ExactPolynomial z(int n, int p) { return ExactPolynomial::variable(n, 1, p, 0); }

// Applies a permutation of the N variables.
ExactPolynomial permuted(const ExactPolynomial& p, const std::vector<int>& perm) {
  ExactPolynomial out(p.particles(), p.dimension());
  for (const auto& [m, c] : p.terms()) {
    Monomial q(p.particles(), p.dimension());
    for (int i = 0; i < p.particles(); ++i) q.set_exponent(perm[i], 0, m.exponent(i, 0));
    out.add_term(q, c);
  }
  return out;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(Partition({2, 1, 0}).parts() == std::vector<int>{2, 1});
  CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Partition({2, -1}), InvalidArgument);
  CHECK(partitions_of(4, 4).size() == 5);
  CHECK(partitions_of(4, 2).size() == 3);
  CHECK(partitions_of(0, 3).size() == 1);
}

TEST_CASE("schur_ssyt: published examples") {
  CHECK(schur_ssyt(Partition({1}), 3) == z(3, 0) + z(3, 1) + z(3, 2));
  CHECK(schur_ssyt(Partition({1, 1}), 3) ==
        z(3, 0) * z(3, 1) + z(3, 0) * z(3, 2) + z(3, 1) * z(3, 2));
  for (int n = 1; n <= 5; ++n) {
    ExactPolynomial prod = ExactPolynomial::constant(n, 1, 1);
    for (int i = 0; i < n; ++i) prod = prod * z(n, i);
    CHECK(schur_ssyt(Partition(std::vector<int>(n, 1)), n) == prod);
  }
  CHECK(schur_ssyt(Partition({1, 1, 1, 1}), 3).is_zero());
}

TEST_CASE("schur_ratio: division oracle") {
  // (z1^2 - z2^2)/(z1 - z2) and (z1^3 - z2^3)/(z1 - z2)
  CHECK(schur_ratio(Partition({1}), 2) == z(2, 0) + z(2, 1));
  CHECK(schur_ratio(Partition({2}), 2) ==
        z(2, 0) * z(2, 0) + z(2, 0) * z(2, 1) + z(2, 1) * z(2, 1));
  for (int n = 1; n <= 4; ++n)
    CHECK(schur_ratio(Partition(), n) == ExactPolynomial::constant(n, 1, 1));
}

TEST_CASE("property: SSYT and determinant ratio agree, symmetric, vertical strips") {
  for (int n = 1; n <= 4; ++n)
    for (int w = 0; w <= 6; ++w)
      for (const auto& lambda : partitions_of(w, n)) {
        CAPTURE(lambda.to_string());
        CAPTURE(n);
        const auto s = schur_ssyt(lambda, n);
        CHECK(s == schur_ratio(lambda, n));
        CHECK(*s.grade() == w);
        for (const auto& [m, c] : s.terms()) CHECK(c > 0);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
          CHECK(permuted(s, perm) == s);
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(schur_ssyt(Partition(std::vector<int>(k, 1)), n) ==
            elementary_symmetric(k, 0, n, 1));
}

TEST_CASE("factor_1d") {
  CHECK(factor_1d(SlaterState({{2}, {1}, {0}}, Statistics::Fermion)) == Partition());
  CHECK(factor_1d(SlaterState({{3}, {1}, {0}}, Statistics::Fermion)) == Partition({1}));
  CHECK(factor_1d(SlaterState({{2}, {0}}, Statistics::Fermion)) == Partition({1}));
  CHECK_THROWS_AS(factor_1d(SlaterState({{1, 0}, {0, 0}}, Statistics::Fermion)),
                  InvalidArgument);
}

TEST_CASE("property: every 1D determinant factors as s_lambda times the Vandermonde") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> pick(n);
    // all n-subsets of {0..8}, descending
    std::function<void(int, int)> rec = [&](int pos, int below) {
      if (pos == n) {
        std::vector<OrbitalVector> rows;
        for (int k : pick) rows.push_back(OrbitalVector{k});
        const SlaterState s(rows, Statistics::Fermion);
        const auto lambda = factor_1d(s);
        CHECK(divide_exact(expand_state(s), vandermonde(n, 0, 1)) == schur_ssyt(lambda, n));
        return;
      }
      for (int k = below - 1; k >= n - 1 - pos; --k) {
        pick[pos] = k;
        rec(pos + 1, k);
      }
    };
    rec(0, 9);
  }
}

TEST_CASE("property: 1D deflation of Euler products agrees with the Schur route") {
  // Phi * Delta deflated over the 1D level basis has coefficient c_mu on
  // the state with orbitals mu_i + N - i exactly when Phi = sum c_mu s_mu.
  for (int n = 2; n <= 4; ++n)
    for (int deg = 1; deg <= 5; ++deg)
      for (const auto& e : enumerate_euler_monomials(n, 1, deg)) {
        const auto phi = e.materialize();
        const int grade = deg + n * (n - 1) / 2;
        const LevelBasis basis(n, 1, grade, Statistics::Fermion);
        const auto coeffs = deflate(phi * vandermonde(n, 0, 1), basis);
        ExactPolynomial rebuilt(n, 1);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
          if (coeffs[i] == 0) continue;
          rebuilt.add_scaled(schur_ssyt(factor_1d(basis.state(i)), n), coeffs[i]);
        }
        CHECK(rebuilt == phi);
      }
}
