#include "shapes/linalg.hpp"

#include <algorithm>

#include "shapes/error.hpp"

namespace shapes {

namespace {

void make_primitive(SparseIntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a * x - b * y, merged by column.
SparseIntRow combine(const Integer& a, const SparseIntRow& x, const Integer& b,
                     const SparseIntRow& y) {
  SparseIntRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      t = a * x[i].second - b * y[j].second;
      if (t != 0) out.emplace_back(x[i].first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseIntRow to_sparse_integer_row(std::span<const Rational> v) {
  Integer den = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  SparseIntRow row;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] == 0) continue;
    Integer scaled = v[c].get_num() * (den / v[c].get_den());
    row.emplace_back(static_cast<int>(c), std::move(scaled));
  }
  return row;
}

EchelonForm::EchelonForm(int dimension) : dimension_(dimension) {
  if (dimension < 0) throw InvalidArgument("negative dimension");
}

bool EchelonForm::insert(std::span<const Rational> v) {
  if (static_cast<int>(v.size()) != dimension_)
    throw InvalidArgument("vector length does not match ambient dimension");
  return insert(to_sparse_integer_row(v));
}

bool EchelonForm::insert(SparseIntRow row) {
  make_primitive(row);
  while (!row.empty()) {
    const int lead = row.front().first;
    if (lead < 0 || lead >= dimension_) throw InvalidArgument("column index out of range");
    auto it = rows_.find(lead);
    if (it == rows_.end()) {
      rows_.emplace(lead, std::move(row));
      return true;
    }
    const SparseIntRow& pivot = it->second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), pivot.front().second.get_mpz_t(), row.front().second.get_mpz_t());
    const Integer a = pivot.front().second / g;
    const Integer b = row.front().second / g;
    row = combine(a, row, b, pivot);
    make_primitive(row);
  }
  return false;
}

std::vector<int> EchelonForm::free_columns() const {
  std::vector<int> out;
  for (int c = 0; c < dimension_; ++c)
    if (!rows_.contains(c)) out.push_back(c);
  return out;
}

std::vector<std::vector<Rational>> EchelonForm::nullspace() const {
  std::vector<std::vector<Rational>> out;
  for (int f : free_columns()) {
    std::vector<Rational> x(dimension_);
    x[f] = 1;
    // Pivots above f are the only ones that can be nonzero; solve them from
    // the bottom up.
    for (auto it = std::make_reverse_iterator(rows_.lower_bound(f)); it != rows_.rend(); ++it) {
      const auto& [p, row] = *it;
      Rational s = 0;
      for (std::size_t k = 1; k < row.size(); ++k) {
        const int c = row[k].first;
        if (c > f) break;
        if (x[c] != 0) s += row[k].second * x[c];
      }
      if (s != 0) x[p] = -s / row.front().second;
    }
    out.push_back(normalize_integer_content(x));
  }
  return out;
}

std::vector<std::vector<Rational>> orthogonal_complement(
    const std::vector<std::vector<Rational>>& vectors, int ambient_dimension) {
  EchelonForm ech(ambient_dimension);
  for (const auto& v : vectors) ech.insert(v);
  return ech.nullspace();
}

int rank_of(const std::vector<std::vector<Rational>>& vectors, int ambient_dimension) {
  EchelonForm ech(ambient_dimension);
  for (const auto& v : vectors) ech.insert(v);
  return ech.rank();
}

std::vector<std::vector<Rational>> reduced_row_echelon(
    const std::vector<std::vector<Rational>>& vectors, int ambient_dimension) {
  std::vector<std::vector<Rational>> m;
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != ambient_dimension)
      throw InvalidArgument("vector length does not match ambient dimension");
    m.push_back(v);
  }
  std::size_t r = 0;
  for (int c = 0; c < ambient_dimension && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int k = c; k < ambient_dimension; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

bool same_subspace(const std::vector<std::vector<Rational>>& a,
                   const std::vector<std::vector<Rational>>& b, int ambient_dimension) {
  return reduced_row_echelon(a, ambient_dimension) == reduced_row_echelon(b, ambient_dimension);
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InvalidArgument("dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

}  // namespace shapes
