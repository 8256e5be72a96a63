#include "shapes/shapegen.hpp"

#include <algorithm>
#include <chrono>
#include <thread>
#include <unordered_map>

#include "shapes/counting.hpp"
#include "shapes/error.hpp"
#include "shapes/linalg.hpp"

namespace shapes {

std::string ShapeRecord::id() const { return std::to_string(grade) + ":" + std::to_string(index); }

std::size_t ShapeRecord::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c != 0; }));
}

const LevelBasis& ShapeCatalog::basis(int grade) const {
  auto it = bases.find(grade);
  if (it == bases.end())
    throw InvalidArgument("catalog has no level basis for grade " + std::to_string(grade));
  return *it->second;
}

std::vector<const ShapeRecord*> ShapeCatalog::shapes_at(int grade) const {
  std::vector<const ShapeRecord*> out;
  for (const auto& s : shapes)
    if (s.grade == grade) out.push_back(&s);
  return out;
}

const ShapeRecord& ShapeCatalog::find(const std::string& id) const {
  for (const auto& s : shapes)
    if (s.id() == id) return s;
  throw InvalidArgument("no shape with id '" + id + "' in the catalog");
}

ExactPolynomial ShapeCatalog::polynomial(const ShapeRecord& shape) const {
  return materialize(shape.coeffs, basis(shape.grade));
}

bool ShapeCatalog::complete() const {
  return Integer(static_cast<unsigned long>(shapes.size())) == shape_polynomial.evaluate_at_one();
}

bool operator==(const ShapeRecord& a, const ShapeRecord& b) {
  return a.grade == b.grade && a.index == b.index && a.statistics == b.statistics &&
         a.coeffs == b.coeffs;
}

bool operator==(const ShapeCatalog& a, const ShapeCatalog& b) {
  if (a.particles != b.particles || a.dimension != b.dimension ||
      a.statistics != b.statistics || a.shape_polynomial != b.shape_polynomial ||
      a.max_grade != b.max_grade || a.shapes != b.shapes || a.bases.size() != b.bases.size())
    return false;
  for (const auto& [g, basis] : a.bases) {
    auto it = b.bases.find(g);
    if (it == b.bases.end() || basis->states() != it->second->states()) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

// Materialized shapes and Euler monomials, shared by generation and span
// verification.
class ProductSource {
 public:
  ProductSource(int particles, int dimension) : particles_(particles), dimension_(dimension) {}

  void add_shape(ExactPolynomial p, int grade) {
    shape_polys_.push_back(std::move(p));
    shape_grades_.push_back(grade);
  }
  std::size_t shape_count() const { return shape_polys_.size(); }
  int shape_grade(std::size_t i) const { return shape_grades_[i]; }
  const ExactPolynomial& shape(std::size_t i) const { return shape_polys_[i]; }

  const std::vector<ExactPolynomial>& euler_polys(int degree) {
    auto it = euler_.find(degree);
    if (it == euler_.end()) {
      std::vector<ExactPolynomial> polys;
      for (const auto& e : enumerate_euler_monomials(particles_, dimension_, degree))
        polys.push_back(e.materialize());
      it = euler_.emplace(degree, std::move(polys)).first;
    }
    return it->second;
  }

  struct Product {
    std::size_t shape;
    const ExactPolynomial* euler;
  };

  // Products landing in `grade`, lower shapes first; with include_same_grade
  // the shapes of `grade` itself appear (times the empty monomial).
  std::vector<Product> products(int grade, bool include_same_grade) {
    std::vector<Product> out;
    for (std::size_t s = 0; s < shape_polys_.size(); ++s) {
      const int deg = grade - shape_grades_[s];
      if (deg < 0 || (deg == 0 && !include_same_grade)) continue;
      for (const auto& e : euler_polys(deg)) out.push_back({s, &e});
    }
    return out;
  }

 private:
  int particles_, dimension_;
  std::vector<ExactPolynomial> shape_polys_;
  std::vector<int> shape_grades_;
  std::map<int, std::vector<ExactPolynomial>> euler_;
};

// Deflates the products into sparse integer rows, in order. Work is split
// into contiguous chunks across threads; the output order does not depend on
// the thread count.
std::vector<SparseIntRow> deflate_products(const ProductSource& src,
                                           const std::vector<ProductSource::Product>& products,
                                           std::size_t begin, std::size_t end,
                                           const LevelBasis& basis, unsigned threads) {
  std::vector<SparseIntRow> out(end - begin);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      const auto& pr = products[k];
      const auto coeffs = deflate(src.shape(pr.shape) * *pr.euler, basis);
      out[k - begin] = to_sparse_integer_row(coeffs);
    }
  };
  const std::size_t n = end - begin;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads <= 1) {
    work(begin, end);
    return out;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = begin + t * chunk;
    const std::size_t hi = std::min(end, lo + chunk);
    if (lo < hi) pool.emplace_back(work, lo, hi);
  }
  return out;
}

constexpr std::size_t kBatch = 256;

}  // namespace

ShapeCatalog generate_shapes(int particles, int dimension, Statistics stat,
                             const GenerateOptions& options) {
  if (particles < 1) throw InvalidArgument("particle count must be >= 1");
  if (dimension < 1) throw InvalidArgument("dimension must be >= 1");
  ShapeCatalog cat;
  cat.particles = particles;
  cat.dimension = dimension;
  cat.statistics = stat;
  cat.shape_polynomial = shape_polynomial(particles, dimension, stat);
  const int ground = *cat.shape_polynomial.lowest_degree();
  const int top = options.max_grade.value_or(*cat.shape_polynomial.highest_degree());
  if (top < 0) throw InvalidArgument("max grade must be >= 0");

  ProductSource src(particles, dimension);
  for (int g = ground; g <= top; ++g) {
    const auto t0 = Clock::now();
    auto basis = std::make_shared<const LevelBasis>(particles, dimension, g, stat,
                                                    options.state_cap);
    const auto products = src.products(g, false);
    EchelonForm trivial(static_cast<int>(basis->size()));
    for (std::size_t b = 0; b < products.size(); b += kBatch) {
      const std::size_t e = std::min(products.size(), b + kBatch);
      for (auto& row : deflate_products(src, products, b, e, *basis, options.threads))
        trivial.insert(std::move(row));
    }
    const auto complement = trivial.nullspace();
    const Integer expected = cat.shape_polynomial.coefficient(g);
    if (Integer(static_cast<unsigned long>(complement.size())) != expected)
      throw ConsistencyError("grade " + std::to_string(g) + ": expected " + expected.get_str() +
                             " new shapes from the shape polynomial, found " +
                             std::to_string(complement.size()) + " (level dimension " +
                             std::to_string(basis->size()) + ", trivial rank " +
                             std::to_string(trivial.rank()) + ")");
    int index = 0;
    for (const auto& v : complement) {
      ShapeRecord rec{g, index++, stat, v};
      src.add_shape(materialize(rec.coeffs, *basis), g);
      cat.shapes.push_back(std::move(rec));
    }
    cat.bases.emplace(g, basis);
    cat.max_grade = g;
    if (options.on_grade) {
      GradeReport rep;
      rep.grade = g;
      rep.level_dimension = basis->size();
      rep.trivial_products = products.size();
      rep.trivial_rank = trivial.rank();
      rep.expected_shapes = static_cast<int>(expected.get_si());
      rep.found_shapes = static_cast<int>(complement.size());
      rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
      options.on_grade(rep);
    }
  }
  return cat;
}

std::string TrivialState::label() const { return euler.to_string() + "*[" + shape_id + "]"; }

std::vector<TrivialState> trivial_states(const ShapeCatalog& catalog, int grade,
                                         std::size_t state_cap) {
  std::shared_ptr<const LevelBasis> basis;
  if (auto it = catalog.bases.find(grade); it != catalog.bases.end())
    basis = it->second;
  else
    basis = std::make_shared<const LevelBasis>(catalog.particles, catalog.dimension, grade,
                                               catalog.statistics, state_cap);
  std::vector<TrivialState> out;
  for (const auto& s : catalog.shapes) {
    if (s.grade >= grade) continue;
    const auto shape_poly = catalog.polynomial(s);
    for (const auto& e : enumerate_euler_monomials(catalog.particles, catalog.dimension,
                                                   grade - s.grade))
      out.push_back({s.id(), e, deflate(shape_poly * e.materialize(), *basis)});
  }
  return out;
}

SpanReport verify_span(const ShapeCatalog& catalog, int grade, std::size_t state_cap) {
  const int top = *catalog.shape_polynomial.highest_degree();
  if (catalog.max_grade < std::min(grade, top))
    throw InvalidArgument("catalog is not complete up to grade " + std::to_string(grade));
  ProductSource src(catalog.particles, catalog.dimension);
  for (const auto& s : catalog.shapes)
    if (s.grade <= grade) src.add_shape(catalog.polynomial(s), s.grade);
  const LevelBasis basis(catalog.particles, catalog.dimension, grade, catalog.statistics,
                         state_cap);
  const auto products = src.products(grade, true);
  const auto rows = deflate_products(src, products, 0, products.size(), basis, 1);

  SpanReport rep;
  rep.grade = grade;
  rep.level_dimension = basis.size();
  rep.products = products.size();
  EchelonForm ech(static_cast<int>(basis.size()));
  for (const auto& r : rows) ech.insert(r);
  rep.rank = ech.rank();

  // Overlaps only between rows sharing a column.
  std::vector<std::vector<std::pair<std::size_t, const Integer*>>> by_column(basis.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) by_column[c].emplace_back(r, &v);
  std::size_t nonzeros = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::unordered_map<std::size_t, Integer> acc;
    for (const auto& [c, v] : rows[r])
      for (const auto& [r2, v2] : by_column[c])
        if (r2 != r) acc[r2] += v * *v2;
    for (const auto& [r2, s] : acc) nonzeros += (s != 0);
  }
  rep.overlap_nonzeros = nonzeros;
  const double pairs = static_cast<double>(rows.size()) * (static_cast<double>(rows.size()) - 1);
  rep.overlap_density = pairs > 0 ? static_cast<double>(nonzeros) / pairs : 0.0;
  rep.passed = rep.rank == static_cast<int>(basis.size());
  return rep;
}

}  // namespace shapes
