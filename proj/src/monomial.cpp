#include "shapes/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "shapes/error.hpp"

namespace shapes {

OrbitalVector::OrbitalVector(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw InvalidArgument("orbital exponents must be non-negative");
  }
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

std::strong_ordering canonical_order(const OrbitalVector& a, const OrbitalVector& b) {
  if (a.dimension() != b.dimension())
    throw InvalidArgument("comparing orbitals of different dimension");
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exponents() <=> b.exponents();
}

std::string to_string(const OrbitalVector& v) {
  std::ostringstream out;
  out << "(";
  for (int a = 0; a < v.dimension(); ++a) out << (a ? "," : "") << v[a];
  out << ")";
  return out.str();
}

std::vector<OrbitalVector> orbitals_up_to_degree(int dimension, int max_degree) {
  if (dimension < 1) throw InvalidArgument("dimension must be >= 1");
  std::vector<OrbitalVector> out;
  std::vector<int> cur(dimension, 0);
  // Compositions of each degree into d parts.
  auto rec = [&](auto&& self, int axis, int remaining) -> void {
    if (axis == dimension - 1) {
      cur[axis] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[axis] = e;
      self(self, axis + 1, remaining - e);
    }
  };
  for (int deg = 0; deg <= max_degree; ++deg) rec(rec, 0, deg);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a > b; });
  return out;
}

Monomial::Monomial(int particles, int dimension) {
  if (particles < 0 || dimension < 1 || 2 + particles * (dimension + 1) > kCapacity)
    throw InvalidArgument("monomial shape " + std::to_string(particles) + "x" +
                          std::to_string(dimension) + " exceeds storage capacity");
  bytes_[0] = static_cast<std::uint8_t>(particles);
  bytes_[1] = static_cast<std::uint8_t>(dimension);
}

Monomial Monomial::from_rows(const std::vector<OrbitalVector>& rows) {
  if (rows.empty()) throw InvalidArgument("monomial needs at least one row");
  const int d = rows.front().dimension();
  Monomial m(static_cast<int>(rows.size()), d);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    if (rows[i].dimension() != d) throw InvalidArgument("ragged monomial rows");
    for (int a = 0; a < d; ++a) m.set_exponent(i, a, rows[i][a]);
  }
  return m;
}

Monomial Monomial::from_matrix(const std::vector<std::vector<int>>& matrix, int dimension) {
  Monomial m(static_cast<int>(matrix.size()), dimension);
  for (int i = 0; i < static_cast<int>(matrix.size()); ++i) {
    if (static_cast<int>(matrix[i].size()) != dimension)
      throw InvalidArgument("monomial row has wrong length");
    for (int a = 0; a < dimension; ++a) m.set_exponent(i, a, matrix[i][a]);
  }
  return m;
}

int Monomial::grade() const {
  int g = 0;
  for (int i = 0; i < particles(); ++i) g += row_degree(i);
  return g;
}

OrbitalVector Monomial::row(int particle) const {
  std::vector<int> e(dimension());
  for (int a = 0; a < dimension(); ++a) e[a] = exponent(particle, a);
  return OrbitalVector(std::move(e));
}

std::vector<std::vector<int>> Monomial::matrix() const {
  std::vector<std::vector<int>> out(particles(), std::vector<int>(dimension()));
  for (int i = 0; i < particles(); ++i)
    for (int a = 0; a < dimension(); ++a) out[i][a] = exponent(i, a);
  return out;
}

void Monomial::set_exponent(int particle, int axis, int value) {
  const int base = 2 + particle * (dimension() + 1);
  const int deg = bytes_[base] - bytes_[base + 1 + axis] + value;
  if (value < 0 || value > 255 || deg > 255)
    throw InvalidArgument("monomial exponent out of range [0, 255]");
  bytes_[base + 1 + axis] = static_cast<std::uint8_t>(value);
  bytes_[base] = static_cast<std::uint8_t>(deg);
}

bool Monomial::divisible_by(const Monomial& divisor) const {
  for (int k = 2; k < used_bytes(); ++k) {
    if (bytes_[k] < divisor.bytes_[k]) return false;
  }
  return true;
}

Monomial Monomial::swapped(int i, int j) const {
  Monomial m = *this;
  const int w = dimension() + 1;
  std::swap_ranges(m.bytes_.begin() + 2 + i * w, m.bytes_.begin() + 2 + (i + 1) * w,
                   m.bytes_.begin() + 2 + j * w);
  return m;
}

Monomial Monomial::without_particles(int i, int j) const {
  Monomial m = *this;
  const int w = dimension() + 1;
  std::fill_n(m.bytes_.begin() + 2 + i * w, w, 0);
  std::fill_n(m.bytes_.begin() + 2 + j * w, w, 0);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.bytes_[0] != b.bytes_[0] || a.bytes_[1] != b.bytes_[1])
    throw InvalidArgument("multiplying monomials of different shape");
  Monomial m = a;
  for (int k = 2; k < a.used_bytes(); ++k) {
    const int s = a.bytes_[k] + b.bytes_[k];
    if (s > 255) throw InvalidArgument("monomial exponent overflow");
    m.bytes_[k] = static_cast<std::uint8_t>(s);
  }
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (a.bytes_[0] != b.bytes_[0] || a.bytes_[1] != b.bytes_[1] || !a.divisible_by(b))
    throw InvalidArgument("monomial is not divisible");
  Monomial m = a;
  for (int k = 2; k < a.used_bytes(); ++k) m.bytes_[k] = a.bytes_[k] - b.bytes_[k];
  return m;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the used bytes.
  std::size_t h = 1469598103934665603ull;
  for (int k = 0; k < used_bytes(); ++k) {
    h ^= bytes_[k];
    h *= 1099511628211ull;
  }
  return h;
}

std::string Monomial::to_string() const {
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < particles(); ++i) {
    for (int a = 0; a < dimension(); ++a) {
      const int e = exponent(i, a);
      if (e == 0) continue;
      if (any) out << "*";
      out << axis_name(a) << (i + 1);
      if (e > 1) out << "^" << e;
      any = true;
    }
  }
  return any ? out.str() : "1";
}

std::string axis_name(int axis) {
  static constexpr const char* kNames[] = {"t", "u", "v", "w"};
  if (axis >= 0 && axis < 4) return kNames[axis];
  return "x" + std::to_string(axis);
}

}  // namespace shapes
