#include "shapes/verify.hpp"

#include <functional>

#include "shapes/counting.hpp"
#include "shapes/error.hpp"
#include "shapes/serialize.hpp"
#include "shapes/shapegen.hpp"

namespace shapes {

namespace {

void run(std::vector<CheckResult>& out, const std::string& name,
         const std::function<std::string()>& body) {
  CheckResult r{name, false, ""};
  try {
    r.detail = body();
    r.passed = true;
  } catch (const ConsistencyError& e) {
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
  }
  out.push_back(std::move(r));
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw ConsistencyError(msg);
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(int particles, int dimension, Statistics stat,
                                             const VerifyOptions& options) {
  if (particles < 1) throw InvalidArgument("particle count must be >= 1");
  if (dimension < 1) throw InvalidArgument("dimension must be >= 1");
  std::vector<CheckResult> out;
  const auto poly = shape_polynomial(particles, dimension, stat);
  const int ground = *poly.lowest_degree();
  const int top = options.max_grade.value_or(*poly.highest_degree());
  if (top < ground)
    throw InvalidArgument("max grade " + std::to_string(top) + " is below the ground grade " +
                          std::to_string(ground));

  run(out, "saturation", [&] {
    const Integer expected = total_shape_count(particles, dimension);
    require(poly.evaluate_at_one() == expected, "P(1) = " + poly.evaluate_at_one().get_str() +
                                                    " but N!^(d-1) = " + expected.get_str());
    return "P(1) = " + expected.get_str();
  });
  run(out, "nonnegative coefficients", [&] {
    require(poly.has_nonnegative_coefficients(), "negative coefficient in " + poly.to_string());
    return poly.to_string();
  });
  if (dimension % 2 == 0) {
    run(out, "palindrome", [&] {
      require(poly.is_palindromic(), poly.to_string() + " is not palindromic");
      return std::string("coefficient list is palindromic");
    });
  } else if (dimension > 1) {
    run(out, "fermion/boson mirror", [&] {
      const auto f = shape_polynomial(particles, dimension, Statistics::Fermion);
      const auto b = shape_polynomial(particles, dimension, Statistics::Boson);
      require(f.reversed().coefficient_list() == b.coefficient_list(),
              "reversed " + f.to_string() + " differs from " + b.to_string());
      return std::string("reversed fermion list equals boson list");
    });
  }
  if (stat == Statistics::Boson) {
    run(out, "boson ground state", [&] {
      require(ground == 0 && poly.coefficient(0) == 1 && poly.coefficient(1) == 0,
              "ground coefficients of " + poly.to_string());
      return std::string("nondegenerate at grade 0, nothing at grade 1");
    });
  }
  run(out, "level dimensions", [&] {
    const auto series = poly * euler_factor(particles, top).pow(dimension);
    std::string detail;
    for (int g = ground; g <= top; ++g) {
      const Integer dim = level_dimension(particles, dimension, g, stat);
      require(series.coefficient(g) == dim, "series coefficient mismatch at grade " +
                                                std::to_string(g));
      if (dim > Integer(static_cast<unsigned long>(options.state_cap))) {
        detail += " g" + std::to_string(g) + ":" + dim.get_str() + "(not enumerated)";
        continue;
      }
      const auto states = enumerate_basis(particles, dimension, g, stat);
      require(Integer(static_cast<unsigned long>(states.size())) == dim,
              "grade " + std::to_string(g) + ": enumeration gives " +
                  std::to_string(states.size()) + ", series gives " + dim.get_str());
      detail += " g" + std::to_string(g) + ":" + dim.get_str();
    }
    return "grades" + detail;
  });

  std::optional<ShapeCatalog> catalog;
  run(out, "shape generation", [&] {
    GenerateOptions go;
    go.max_grade = top;
    go.state_cap = options.state_cap;
    go.threads = options.threads;
    catalog = generate_shapes(particles, dimension, stat, go);
    std::string detail = std::to_string(catalog->shapes.size()) + " shapes";
    if (top >= *poly.highest_degree()) {
      require(catalog->complete(), "catalog is incomplete");
      detail += ", complete";
    }
    return detail;
  });
  if (!catalog) return out;

  run(out, stat == Statistics::Fermion ? "shapes antisymmetric" : "shapes symmetric", [&] {
    for (const auto& s : catalog->shapes) {
      const auto p = catalog->polynomial(s);
      require(!p.is_zero(), "shape " + s.id() + " is zero");
      const bool ok = stat == Statistics::Fermion ? is_antisymmetric(p) : is_symmetric(p);
      require(ok, "shape " + s.id() + " has the wrong exchange symmetry");
    }
    return std::to_string(catalog->shapes.size()) + " shapes checked";
  });
  run(out, "deflation round trip", [&] {
    for (const auto& s : catalog->shapes) {
      const auto& basis = catalog->basis(s.grade);
      require(deflate(catalog->polynomial(s), basis) == s.coeffs,
              "shape " + s.id() + " does not deflate to its coefficients");
    }
    return std::string("every shape deflates to its stored coefficients");
  });
  run(out, "catalog JSON round trip", [&] {
    const auto j = to_json(*catalog);
    const auto back = catalog_from_json(Json::parse(j.dump()), options.state_cap);
    require(back == *catalog, "catalog differs after a JSON round trip");
    return std::to_string(j.dump().size()) + " bytes";
  });
  run(out, "trivial products span each level", [&] {
    std::string detail;
    for (int g = ground; g <= top; ++g) {
      const auto rep = verify_span(*catalog, g, options.state_cap);
      require(rep.passed, "grade " + std::to_string(g) + ": rank " + std::to_string(rep.rank) +
                              " of " + std::to_string(rep.level_dimension));
      detail += " g" + std::to_string(g) + ":" + std::to_string(rep.rank);
    }
    return "ranks" + detail;
  });
  return out;
}

}  // namespace shapes
