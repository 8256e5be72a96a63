#include "shapes/schur.hpp"

#include <numeric>
#include <sstream>

#include "shapes/error.hpp"

namespace shapes {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidArgument("partition parts must be non-increasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
  out << ")";
  return out.str();
}

std::vector<Partition> partitions_of(int weight, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, weight, weight);
  return out;
}

ExactPolynomial schur_ssyt(const Partition& lambda, int particles) {
  if (particles < 1) throw InvalidArgument("particle count must be >= 1");
  ExactPolynomial result(particles, 1);
  if (lambda.length() > particles) return result;

  // Cells in row-major order; fill[r][c] in 1..N.
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.part(r); ++c) cells.emplace_back(r, c);
  std::vector<std::vector<int>> fill(lambda.length());
  for (int r = 0; r < lambda.length(); ++r) fill[r].assign(lambda.part(r), 0);
  std::vector<int> content(particles, 0);

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      Monomial m(particles, 1);
      for (int i = 0; i < particles; ++i) m.set_exponent(i, 0, content[i]);
      result.add_term(m, 1);
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[r][c - 1]);      // rows weakly increase
    if (r > 0) lo = std::max(lo, fill[r - 1][c] + 1);  // columns strictly increase
    // Column strictness needs room for the cells below in this column.
    int below = 0;
    for (int r2 = r + 1; r2 < lambda.length() && lambda.part(r2) > c; ++r2) ++below;
    const int hi = particles - below;
    for (int v = lo; v <= hi; ++v) {
      fill[r][c] = v;
      ++content[v - 1];
      self(self, k + 1);
      --content[v - 1];
    }
  };
  rec(rec, 0);
  return result;
}

ExactPolynomial schur_ratio(const Partition& lambda, int particles) {
  if (particles < 1) throw InvalidArgument("particle count must be >= 1");
  if (lambda.length() > particles) return ExactPolynomial(particles, 1);
  std::vector<OrbitalVector> orbitals;
  for (int i = 0; i < particles; ++i) orbitals.push_back({lambda.part(i) + particles - 1 - i});
  const SlaterState numerator(std::move(orbitals), Statistics::Fermion);
  return divide_exact(expand_state(numerator), vandermonde(particles, 0, 1));
}

Partition factor_1d(const SlaterState& s) {
  if (s.statistics() != Statistics::Fermion || s.dimension() != 1)
    throw InvalidArgument("factor_1d needs a one-dimensional fermion state");
  const int n = s.particles();
  std::vector<int> parts(n);
  for (int i = 0; i < n; ++i) parts[i] = s.orbitals()[i][0] - (n - 1 - i);
  Partition lambda(std::move(parts));
  SHAPES_ENSURE(expand_state(s) == schur_ssyt(lambda, n) * vandermonde(n, 0, 1),
                "1D Slater determinant " + s.to_string() + " does not factor as s_" +
                    lambda.to_string() + " times the Vandermonde determinant");
  return lambda;
}

}  // namespace shapes
