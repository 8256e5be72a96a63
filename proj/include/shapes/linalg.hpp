#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "shapes/rational.hpp"

namespace shapes {

using SparseIntRow = std::vector<std::pair<int, Integer>>;  // sorted by column

SparseIntRow to_sparse_integer_row(std::span<const Rational> v);

// Row echelon form over the integers, built incrementally. Each stored row is
// primitive (content 1) and keyed by its pivot, the first nonzero column.
// Incoming rows are reduced fraction-free against existing pivots only at
// their leading entry, which keeps rows sparse.
class EchelonForm {
 public:
  explicit EchelonForm(int dimension);

  int dimension() const { return dimension_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Returns true if the row was independent of the current span.
  bool insert(std::span<const Rational> v);
  bool insert(SparseIntRow row);

  const std::map<int, SparseIntRow>& rows() const { return rows_; }
  std::vector<int> free_columns() const;

  // Basis of { x : r . x = 0 for every stored row r }: one vector per free
  // column f with x_f = 1 and the other free entries 0, scaled to coprime
  // integers with the first nonzero entry positive.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  int dimension_;
  std::map<int, SparseIntRow> rows_;
};

std::vector<std::vector<Rational>> orthogonal_complement(
    const std::vector<std::vector<Rational>>& vectors, int ambient_dimension);

int rank_of(const std::vector<std::vector<Rational>>& vectors, int ambient_dimension);

// Reduced row echelon form (pivots 1, zero rows dropped): a canonical
// representative of the row space, used for subspace equality.
std::vector<std::vector<Rational>> reduced_row_echelon(
    const std::vector<std::vector<Rational>>& vectors, int ambient_dimension);

bool same_subspace(const std::vector<std::vector<Rational>>& a,
                   const std::vector<std::vector<Rational>>& b, int ambient_dimension);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace shapes
