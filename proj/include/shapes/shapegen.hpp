#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shapes/deflation.hpp"
#include "shapes/qseries.hpp"
#include "shapes/rational.hpp"
#include "shapes/statistics.hpp"

namespace shapes {

// One shape: an exact coefficient vector over the level basis of its grade,
// in canonical form (coprime integers, first nonzero entry positive).
struct ShapeRecord {
  int grade = 0;
  int index = 0;  // position among the shapes of this grade
  Statistics statistics = Statistics::Fermion;
  std::vector<Rational> coeffs;

  // "grade:index", e.g. "3:0".
  std::string id() const;
  std::size_t support_size() const;
};

struct ShapeCatalog {
  int particles = 0;
  int dimension = 0;
  Statistics statistics = Statistics::Fermion;
  GradedQPolynomial shape_polynomial;
  int max_grade = -1;  // grades up to this one have been processed
  std::vector<ShapeRecord> shapes;
  std::map<int, std::shared_ptr<const LevelBasis>> bases;

  const LevelBasis& basis(int grade) const;
  std::vector<const ShapeRecord*> shapes_at(int grade) const;
  const ShapeRecord& find(const std::string& id) const;
  ExactPolynomial polynomial(const ShapeRecord& shape) const;
  // Every shape of the polynomial has been generated.
  bool complete() const;
};

bool operator==(const ShapeRecord& a, const ShapeRecord& b);
bool operator==(const ShapeCatalog& a, const ShapeCatalog& b);

struct GradeReport {
  int grade = 0;
  std::size_t level_dimension = 0;
  std::size_t trivial_products = 0;
  int trivial_rank = 0;
  int expected_shapes = 0;
  int found_shapes = 0;
  double seconds = 0;
};

struct GenerateOptions {
  // Defaults to the degree of the shape polynomial.
  std::optional<int> max_grade;
  std::size_t state_cap = kDefaultStateCap;
  unsigned threads = 1;
  std::function<void(const GradeReport&)> on_grade;
};

// Per grade, from the ground grade upward: deflate every lower shape times
// every Euler monomial of the complementary degree, and take the orthogonal
// complement of their span (states of one grade are orthonormal
// coordinates). The complement dimension must equal the shape polynomial's
// coefficient; a mismatch throws ConsistencyError.
ShapeCatalog generate_shapes(int particles, int dimension, Statistics stat,
                             const GenerateOptions& options = {});

// A lower-grade shape times a nonempty Euler monomial, deflated over the
// level basis of `grade`.
struct TrivialState {
  std::string shape_id;
  EulerMonomial euler;
  std::vector<Rational> coeffs;

  std::string label() const;  // e.g. "e1(t)*[2:0]"
};

// Every trivial state of `grade` in generation order (shapes by grade and
// index, then Euler monomials in enumeration order).
std::vector<TrivialState> trivial_states(const ShapeCatalog& catalog, int grade,
                                         std::size_t state_cap = kDefaultStateCap);

struct SpanReport {
  int grade = 0;
  std::size_t level_dimension = 0;
  std::size_t products = 0;  // shape x Euler products of this grade
  int rank = 0;
  // Off-diagonal nonzero entries of the products' overlap (Gram) matrix.
  std::size_t overlap_nonzeros = 0;
  double overlap_density = 0;  // overlap_nonzeros / (products * (products - 1))
  bool passed = false;
};

// Checks that all shape x Euler products of `grade` span the whole level.
// Needs the catalog to be complete up to min(grade, polynomial degree).
SpanReport verify_span(const ShapeCatalog& catalog, int grade,
                       std::size_t state_cap = kDefaultStateCap);

}  // namespace shapes
