#include "shapes/slater.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "shapes/error.hpp"

namespace shapes {

SlaterState::SlaterState(std::vector<OrbitalVector> orbitals, Statistics stat)
    : orbitals_(std::move(orbitals)), stat_(stat) {
  if (orbitals_.empty()) throw InvalidArgument("a state needs at least one orbital");
  for (std::size_t i = 1; i < orbitals_.size(); ++i) {
    const auto c = canonical_order(orbitals_[i - 1], orbitals_[i]);
    if (c < 0) throw InvalidArgument("state orbitals are not in canonical descending order");
    if (c == 0 && stat_ == Statistics::Fermion)
      throw InvalidArgument("fermion state repeats orbital " + shapes::to_string(orbitals_[i]));
  }
}

std::optional<std::pair<SlaterState, int>> SlaterState::canonicalize(
    std::vector<OrbitalVector> orbitals, Statistics stat) {
  if (orbitals.empty()) throw InvalidArgument("a state needs at least one orbital");
  // Insertion sort, counting transpositions.
  int sign = 1;
  for (std::size_t i = 1; i < orbitals.size(); ++i) {
    for (std::size_t j = i; j > 0 && orbitals[j - 1] < orbitals[j]; --j) {
      std::swap(orbitals[j - 1], orbitals[j]);
      sign = -sign;
    }
  }
  if (stat == Statistics::Fermion) {
    for (std::size_t i = 1; i < orbitals.size(); ++i)
      if (orbitals[i - 1] == orbitals[i]) return std::nullopt;
  } else {
    sign = 1;
  }
  return std::make_pair(SlaterState(std::move(orbitals), stat), sign);
}

int SlaterState::grade() const {
  int g = 0;
  for (const auto& o : orbitals_) g += o.degree();
  return g;
}

Monomial SlaterState::leading_monomial() const { return Monomial::from_rows(orbitals_); }

std::string SlaterState::to_string() const {
  const char* bar = stat_ == Statistics::Fermion ? "|" : "+";
  std::ostringstream out;
  out << bar;
  for (std::size_t i = 0; i < orbitals_.size(); ++i)
    out << (i ? "," : "") << shapes::to_string(orbitals_[i]);
  out << bar;
  return out.str();
}

ExactPolynomial expand_state(const SlaterState& s) {
  const int n = s.particles();
  const int d = s.dimension();
  // perm[r] = particle that receives orbital r.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ExactPolynomial p(n, d);
  do {
    Monomial m(n, d);
    int inversions = 0;
    for (int r = 0; r < n; ++r) {
      for (int a = 0; a < d; ++a) m.set_exponent(perm[r], a, s.orbitals()[r][a]);
      for (int r2 = r + 1; r2 < n; ++r2) inversions += perm[r] > perm[r2];
    }
    const int sign = (s.statistics() == Statistics::Fermion && inversions % 2) ? -1 : 1;
    p.add_term(m, sign);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

namespace {

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_axis(int axis, int particles, int dimension) {
  if (particles < 1) throw InvalidArgument("particle count must be >= 1");
  if (axis < 0 || axis >= dimension) throw InvalidArgument("axis out of range");
}

}  // namespace

ExactPolynomial euler_power(int m, int k, int axis, int particles, int dimension) {
  check_axis(axis, particles, dimension);
  if (m < 1 || k < 0) throw InvalidArgument("euler_power needs m >= 1 and k >= 0");
  ExactPolynomial p(particles, dimension);
  if (k == 0) return ExactPolynomial::constant(particles, dimension, 1);
  for_each_subset(particles, m, [&](const std::vector<int>& subset) {
    Monomial mono(particles, dimension);
    for (int i : subset) mono.set_exponent(i, axis, k);
    p.add_term(mono, 1);
  });
  return p;
}

ExactPolynomial elementary_symmetric(int k, int axis, int particles, int dimension) {
  if (k < 1) throw InvalidArgument("elementary_symmetric needs k >= 1");
  return euler_power(k, 1, axis, particles, dimension);
}

ExactPolynomial vandermonde(int particles, int axis, int dimension) {
  check_axis(axis, particles, dimension);
  ExactPolynomial p = ExactPolynomial::constant(particles, dimension, 1);
  for (int i = 0; i < particles; ++i) {
    for (int j = i + 1; j < particles; ++j) {
      p = p * (ExactPolynomial::variable(particles, dimension, i, axis) -
               ExactPolynomial::variable(particles, dimension, j, axis));
    }
  }
  return p;
}

EulerMonomial::EulerMonomial(int particles, int dimension)
    : particles_(particles), dimension_(dimension), counts_(particles * dimension, 0) {
  if (particles < 1 || dimension < 1) throw InvalidArgument("EulerMonomial needs N, d >= 1");
}

void EulerMonomial::set_count(int axis, int m, int k) {
  if (axis < 0 || axis >= dimension_ || m < 1 || m > particles_ || k < 0)
    throw InvalidArgument("Euler boson index out of range");
  counts_[axis * particles_ + (m - 1)] = k;
}

int EulerMonomial::degree() const {
  int deg = 0;
  for (int a = 0; a < dimension_; ++a)
    for (int m = 1; m <= particles_; ++m) deg += m * count(a, m);
  return deg;
}

ExactPolynomial EulerMonomial::materialize() const {
  ExactPolynomial p = ExactPolynomial::constant(particles_, dimension_, 1);
  for (int a = 0; a < dimension_; ++a)
    for (int m = 1; m <= particles_; ++m)
      if (count(a, m) > 0) p = p * euler_power(m, count(a, m), a, particles_, dimension_);
  return p;
}

std::string EulerMonomial::to_string() const {
  std::ostringstream out;
  bool any = false;
  for (int a = 0; a < dimension_; ++a) {
    for (int m = 1; m <= particles_; ++m) {
      const int k = count(a, m);
      if (k == 0) continue;
      out << (any ? "*" : "") << "e" << m << "(" << axis_name(a) << ")";
      if (k > 1) out << "^" << k;
      any = true;
    }
  }
  return any ? out.str() : "1";
}

std::vector<EulerMonomial> enumerate_euler_monomials(int particles, int dimension, int degree) {
  if (degree < 0) throw InvalidArgument("degree must be >= 0");
  std::vector<EulerMonomial> out;
  EulerMonomial cur(particles, dimension);
  const int slots = particles * dimension;
  // Slot s covers (axis = s / N, m = s % N + 1); higher counts first.
  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == slots) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    const int axis = slot / particles;
    const int m = slot % particles + 1;
    for (int k = remaining / m; k >= 0; --k) {
      cur.set_count(axis, m, k);
      self(self, slot + 1, remaining - k * m);
    }
    cur.set_count(axis, m, 0);
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<SlaterState> enumerate_basis(int particles, int dimension, int grade,
                                         Statistics stat) {
  if (particles < 1) throw InvalidArgument("particle count must be >= 1");
  if (grade < 0) throw InvalidArgument("grade must be >= 0");
  const std::vector<OrbitalVector> orbs = orbitals_up_to_degree(dimension, grade);
  const int count = static_cast<int>(orbs.size());
  std::vector<SlaterState> out;
  std::vector<OrbitalVector> chosen;
  chosen.reserve(particles);
  const bool strict = stat == Statistics::Fermion;
  // Orbitals are picked at non-decreasing indices into the descending list.
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    const int left = particles - static_cast<int>(chosen.size());
    if (left == 0) {
      if (remaining == 0) out.emplace_back(chosen, stat);
      return;
    }
    for (int i = start; i < count; ++i) {
      const int deg = orbs[i].degree();
      if (deg > remaining) continue;
      // The remaining picks have degree <= deg each.
      if (deg * left < remaining) break;
      chosen.push_back(orbs[i]);
      self(self, strict ? i + 1 : i, remaining - deg);
      chosen.pop_back();
    }
  };
  rec(rec, 0, grade);
  return out;
}

}  // namespace shapes
