#include "shapes/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "shapes/counting.hpp"
#include "shapes/error.hpp"

namespace shapes {

namespace {

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0)
      throw InvalidArgument("bad integer '" + j.get<std::string>() + "'");
    return z;
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidArgument(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InvalidArgument(std::string("field '") + key + "' is not an integer");
  return v.get<int>();
}

void check_version(const Json& j) {
  if (int_field(j, "format_version") != kFormatVersion)
    throw InvalidArgument("unsupported format_version " + field(j, "format_version").dump());
}

std::vector<OrbitalVector> orbitals_from_json(const Json& j, int dimension) {
  if (!j.is_array()) throw InvalidArgument("orbital list must be an array");
  std::vector<OrbitalVector> out;
  for (const auto& o : j) {
    auto e = o.get<std::vector<int>>();
    if (static_cast<int>(e.size()) != dimension)
      throw InvalidArgument("orbital " + o.dump() + " has the wrong dimension");
    out.emplace_back(std::move(e));
  }
  return out;
}

}  // namespace

Json to_json(const GradedQPolynomial& p) {
  Json j;
  j["lowest"] = p.lowest_degree().value_or(0);
  Json coeffs = Json::array();
  for (const auto& c : p.coefficient_list()) coeffs.push_back(integer_to_json(c));
  j["coeffs"] = std::move(coeffs);
  if (p.truncation()) j["truncation"] = *p.truncation();
  return j;
}

GradedQPolynomial q_polynomial_from_json(const Json& j) {
  const int lowest = int_field(j, "lowest");
  const Json& cs = field(j, "coeffs");
  if (!cs.is_array()) throw InvalidArgument("'coeffs' must be an array");
  std::vector<Integer> coeffs;
  for (const auto& c : cs) coeffs.push_back(integer_from_json(c));
  auto p = GradedQPolynomial::from_coefficients(lowest, coeffs);
  if (j.contains("truncation")) p = p.truncated(int_field(j, "truncation"));
  return p;
}

Json to_json(const ExactPolynomial& p) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["N"] = p.particles();
  j["d"] = p.dimension();
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t;
    t["matrix"] = m.matrix();
    t["coeff"] = to_string(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

ExactPolynomial polynomial_from_json(const Json& j) {
  check_version(j);
  const int n = int_field(j, "N"), d = int_field(j, "d");
  if (n < 1 || d < 1) throw InvalidArgument("polynomial needs N >= 1 and d >= 1");
  ExactPolynomial p(n, d);
  for (const auto& t : field(j, "terms")) {
    const auto matrix = field(t, "matrix").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(matrix.size()) != n)
      throw InvalidArgument("term matrix has the wrong number of rows");
    const Json& c = field(t, "coeff");
    if (!c.is_string()) throw InvalidArgument("coefficients must be \"p/q\" strings");
    p.add_term(Monomial::from_matrix(matrix, d), parse_rational(c.get<std::string>()));
  }
  return p;
}

Json to_json(const ShapeCatalog& c) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["N"] = c.particles;
  j["d"] = c.dimension;
  j["statistics"] = to_string(c.statistics);
  j["shape_polynomial"] = to_json(c.shape_polynomial);
  j["max_grade"] = c.max_grade;
  Json shapes = Json::array();
  for (const auto& s : c.shapes) {
    const auto& basis = c.basis(s.grade);
    Json js;
    js["id"] = s.id();
    js["grade"] = s.grade;
    js["index"] = s.index;
    Json states = Json::array(), coeffs = Json::array();
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
      if (s.coeffs[i] == 0) continue;
      Json orbitals = Json::array();
      for (const auto& o : basis.state(i).orbitals()) orbitals.push_back(o.exponents());
      states.push_back(std::move(orbitals));
      coeffs.push_back(to_string(s.coeffs[i]));
    }
    js["basis"] = std::move(states);
    js["coeffs"] = std::move(coeffs);
    shapes.push_back(std::move(js));
  }
  j["shapes"] = std::move(shapes);
  return j;
}

ShapeCatalog catalog_from_json(const Json& j, std::size_t state_cap) {
  check_version(j);
  ShapeCatalog c;
  c.particles = int_field(j, "N");
  c.dimension = int_field(j, "d");
  if (c.particles < 1 || c.dimension < 1) throw InvalidArgument("catalog needs N >= 1 and d >= 1");
  c.statistics = parse_statistics(field(j, "statistics").get<std::string>());
  c.shape_polynomial = q_polynomial_from_json(field(j, "shape_polynomial"));
  c.max_grade = int_field(j, "max_grade");
  if (c.shape_polynomial.is_zero()) throw InvalidArgument("catalog shape polynomial is zero");
  const int ground = *c.shape_polynomial.lowest_degree();
  for (int g = ground; g <= c.max_grade; ++g)
    c.bases.emplace(g, std::make_shared<const LevelBasis>(c.particles, c.dimension, g,
                                                          c.statistics, state_cap));
  for (const auto& js : field(j, "shapes")) {
    ShapeRecord s;
    s.grade = int_field(js, "grade");
    s.index = int_field(js, "index");
    s.statistics = c.statistics;
    const auto& basis = c.basis(s.grade);
    s.coeffs.assign(basis.size(), Rational(0));
    const Json& states = field(js, "basis");
    const Json& coeffs = field(js, "coeffs");
    if (!states.is_array() || !coeffs.is_array() || states.size() != coeffs.size())
      throw InvalidArgument("shape " + s.id() + ": basis and coeffs differ in length");
    for (std::size_t k = 0; k < states.size(); ++k) {
      const SlaterState st(orbitals_from_json(states[k], c.dimension), c.statistics);
      const long idx = basis.index_of(st);
      if (idx < 0)
        throw InvalidArgument("shape " + s.id() + ": state " + st.to_string() +
                              " is not in the level basis");
      s.coeffs[idx] = parse_rational(coeffs[k].get<std::string>());
    }
    if (js.contains("id") && js.at("id") != s.id())
      throw InvalidArgument("shape id " + js.at("id").dump() + " does not match grade:index");
    c.shapes.push_back(std::move(s));
  }
  if (!(c.shape_polynomial == shape_polynomial(c.particles, c.dimension, c.statistics)))
    throw ConsistencyError("catalog shape polynomial differs from the recomputed one");
  for (int g = ground; g <= c.max_grade; ++g) {
    const auto found = c.shapes_at(g).size();
    if (Integer(static_cast<unsigned long>(found)) != c.shape_polynomial.coefficient(g))
      throw ConsistencyError("catalog has " + std::to_string(found) + " shapes at grade " +
                             std::to_string(g) + ", expected " +
                             c.shape_polynomial.coefficient(g).get_str());
  }
  return c;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace shapes
