#include "shapes/coulomb.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <unordered_map>

#include "shapes/error.hpp"

namespace shapes {

std::vector<Integer> hermite_linearization(int n, int m) {
  if (n < 0 || m < 0) throw InvalidArgument("Hermite indices must be non-negative");
  // H_n H_m = sum_j 2^j j! C(n,j) C(m,j) H_{n+m-2j}
  std::vector<Integer> a(n + m + 1, 0);
  for (int j = 0; j <= std::min(n, m); ++j) {
    Integer c = factorial(j) * binomial(n, j) * binomial(m, j);
    mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), j);
    a[n + m - 2 * j] = c;
  }
  return a;
}

double PiRational::value() const {
  return rational.get_d() * std::pow(std::numbers::pi, pi_power);
}

namespace {

// Gamma(k / 2) = rational * sqrt(pi)^(k odd).
std::pair<Rational, bool> gamma_half(int k) {
  if (k % 2 == 0) return {Rational(factorial(k / 2 - 1)), false};
  // Gamma(j + 1/2) = (2j)! / (4^j j!) sqrt(pi)
  const int j = (k - 1) / 2;
  Integer den = factorial(j);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * j);
  Rational r(factorial(2 * j), den);
  r.canonicalize();
  return {r, true};
}

}  // namespace

PiRational beta_integral(int d, int l) {
  if (d < 2) throw InvalidArgument("beta integral needs d >= 2");
  if (l < 0 || l % 2 != 0) throw InvalidArgument("beta integral needs even l >= 0");
  const auto [g1, s1] = gamma_half(l + 1);
  const auto [g2, s2] = gamma_half(d - 1);
  const auto [g3, s3] = gamma_half(l + d);
  const int sqrt_pi = int(s1) + int(s2) - int(s3);
  SHAPES_ENSURE(sqrt_pi % 2 == 0, "beta integral: odd power of sqrt(pi)");
  PiRational out{g1 * g2 / (2 * g3), sqrt_pi / 2};
  out.rational.canonicalize();
  return out;
}

int coulomb_half_pi_power(int d) { return 2 * d - 1 + (d % 2 == 0 ? 2 : 0); }

double CoulombExact::value() const {
  return rational.get_d() * std::numbers::sqrt2 * std::pow(std::numbers::pi, 0.5 * half_pi_power);
}

CoulombTable::CoulombTable(int dimension) : dimension_(dimension) {
  if (dimension < 2) throw InvalidArgument("Coulomb elements need d >= 2");
}

std::size_t CoulombTable::cached_axis_polynomials() const {
  std::shared_lock lock(mutex_);
  return axis_cache_.size();
}

const std::vector<Rational>& CoulombTable::axis_polynomial(int n, int np, int m, int mp) {
  const std::array<int, 4> key{n, np, m, mp};
  {
    std::shared_lock lock(mutex_);
    if (auto it = axis_cache_.find(key); it != axis_cache_.end()) return it->second;
  }
  // Coefficients A_j of w^{2j}: sum over k + k' = 2j of
  // a^{nm}_k a^{n'm'}_{k'} (-1)^k H_{2j}(0) / 2^j.
  const auto a = hermite_linearization(n, m);
  const auto b = hermite_linearization(np, mp);
  const int top = (n + m + np + mp) / 2;
  std::vector<Rational> poly;
  if ((n + m + np + mp) % 2 == 0) {
    poly.assign(top + 1, Rational(0));
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == 0) continue;
      for (std::size_t kp = 0; kp < b.size(); ++kp) {
        if (b[kp] == 0 || (k + kp) % 2 != 0) continue;
        const int j = static_cast<int>((k + kp) / 2);
        Integer term = a[k] * b[kp];
        if (k % 2 == 1) term = -term;
        poly[j] += Rational(term);
      }
    }
    for (int j = 0; j <= top; ++j) {
      if (poly[j] == 0) continue;
      // H_{2j}(0) / 2^j = (-1)^j (2j)! / (j! 2^j)
      Integer den = factorial(j);
      mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), j);
      Rational h(factorial(2 * j), den);
      h.canonicalize();
      if (j % 2 == 1) h = -h;
      poly[j] *= h;
    }
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
  }
  std::unique_lock lock(mutex_);
  return axis_cache_.try_emplace(key, std::move(poly)).first->second;
}

Rational CoulombTable::element(std::span<const int> n, std::span<const int> n_prime,
                               std::span<const int> m, std::span<const int> m_prime) {
  const int d = dimension_;
  if (static_cast<int>(n.size()) != d || static_cast<int>(n_prime.size()) != d ||
      static_cast<int>(m.size()) != d || static_cast<int>(m_prime.size()) != d)
    throw InvalidArgument("Coulomb element index vectors need " + std::to_string(d) + " entries");
  for (int i = 0; i < d; ++i)
    if (n[i] < 0 || n_prime[i] < 0 || m[i] < 0 || m_prime[i] < 0)
      throw InvalidArgument("Hermite indices must be non-negative");

  std::vector<Rational> total{Rational(1)};
  for (int i = 0; i < d; ++i) {
    const auto& axis = axis_polynomial(n[i], n_prime[i], m[i], m_prime[i]);
    if (axis.empty()) return Rational(0);
    std::vector<Rational> next(total.size() + axis.size() - 1, Rational(0));
    for (std::size_t x = 0; x < total.size(); ++x)
      for (std::size_t y = 0; y < axis.size(); ++y) next[x + y] += total[x] * axis[y];
    total = std::move(next);
  }
  {
    std::shared_lock lock(mutex_);
    if (beta_.size() < total.size()) {
      lock.unlock();
      std::unique_lock ulock(mutex_);
      for (std::size_t j = beta_.size(); j < total.size(); ++j)
        beta_.push_back(beta_integral(d, 2 * static_cast<int>(j)).rational);
    }
  }
  std::shared_lock lock(mutex_);
  Rational sum(0);
  for (std::size_t j = 0; j < total.size(); ++j) sum += total[j] * beta_[j];
  return sum;
}

CoulombExact two_body_element_exact(std::span<const int> n, std::span<const int> n_prime,
                                    std::span<const int> m, std::span<const int> m_prime) {
  const int d = static_cast<int>(n.size());
  CoulombTable table(d);
  return {table.element(n, n_prime, m, m_prime), coulomb_half_pi_power(d)};
}

double two_body_element(std::span<const int> n, std::span<const int> n_prime,
                        std::span<const int> m, std::span<const int> m_prime) {
  return two_body_element_exact(n, n_prime, m, m_prime).value();
}

namespace {

// prod over entries of 2^e e!: the squared norm of a Hermite product
// without its sqrt(pi) factors.
Integer hermite_norm(const Monomial& mono, int skip_a, int skip_b) {
  Integer out = 1;
  for (int p = 0; p < mono.particles(); ++p) {
    if (p == skip_a || p == skip_b) continue;
    for (int a = 0; a < mono.dimension(); ++a) {
      const int e = mono.exponent(p, a);
      out *= factorial(e);
      mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), e);
    }
  }
  return out;
}

Rational squared_norm(const ExactPolynomial& p) {
  Rational out(0);
  for (const auto& [m, c] : p.terms()) out += c * c * Rational(hermite_norm(m, -1, -1));
  return out;
}

}  // namespace

double many_body_vee(const ExactPolynomial& a, const ExactPolynomial& b, const Realization& r,
                     CoulombTable* table) {
  if (r.kind != RealizationKind::HermiteOscillator)
    throw InvalidArgument("Coulomb elements need the Hermite oscillator realization");
  if (a.particles() != b.particles() || a.dimension() != b.dimension())
    throw InvalidArgument("states differ in particle count or dimension");
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("cannot normalize the zero polynomial");
  if (a.grade() != b.grade()) throw InvalidArgument("states differ in grade");
  const int n = a.particles(), d = a.dimension();
  std::optional<CoulombTable> own;
  if (table == nullptr) table = &own.emplace(d);
  if (table->dimension() != d) throw InvalidArgument("Coulomb table dimension mismatch");

  std::vector<std::pair<Monomial, Rational>> ket(b.terms().begin(), b.terms().end());
  Rational vee(0);
  std::vector<int> ni(d), nj(d), mi(d), mj(d);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::unordered_map<Monomial, std::vector<std::size_t>, MonomialHash> by_spectators;
      for (std::size_t t = 0; t < ket.size(); ++t)
        by_spectators[ket[t].first.without_particles(i, j)].push_back(t);
      for (const auto& [bm, bc] : a.terms()) {
        auto it = by_spectators.find(bm.without_particles(i, j));
        if (it == by_spectators.end()) continue;
        const Rational spect(hermite_norm(bm, i, j));
        for (int x = 0; x < d; ++x) {
          ni[x] = bm.exponent(i, x);
          nj[x] = bm.exponent(j, x);
        }
        for (std::size_t t : it->second) {
          const auto& [km, kc] = ket[t];
          for (int x = 0; x < d; ++x) {
            mi[x] = km.exponent(i, x);
            mj[x] = km.exponent(j, x);
          }
          const Rational e = table->element(ni, nj, mi, mj);
          if (e != 0) vee += bc * kc * spect * e;
        }
      }
    }
  // vee * sqrt(2) pi^(h/2) pi^((N-2)d/2) / (pi^(Nd/2) sqrt(|a|^2 |b|^2))
  const Rational na = squared_norm(a), nb = squared_norm(b);
  constexpr unsigned kBits = 256;
  mpf_class ratio(vee, kBits);
  mpf_class denom(na * nb, kBits);
  denom = sqrt(denom);
  ratio /= denom;
  const int half_pi = coulomb_half_pi_power(d) - 2 * d;
  return ratio.get_d() * std::numbers::sqrt2 * std::pow(std::numbers::pi, 0.5 * half_pi) /
         r.length_scale;
}

double many_body_vee(std::span<const Rational> a, std::span<const Rational> b,
                     const LevelBasis& basis, const Realization& r, CoulombTable* table) {
  if (a.size() != basis.size() || b.size() != basis.size())
    throw InvalidArgument("coefficient vectors do not match the level basis");
  return many_body_vee(materialize(a, basis), materialize(b, basis), r, table);
}

}  // namespace shapes
