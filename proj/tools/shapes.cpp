// Command-line entry point: shapes <subcommand> [options]
//
// Exit status: 0 success, 1 failed verification or I/O error, 2 invalid
// arguments, 3 internal consistency failure, 4 state-count cap exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "shapes/coulomb.hpp"
#include "shapes/counting.hpp"
#include "shapes/error.hpp"
#include "shapes/realize.hpp"
#include "shapes/schur.hpp"
#include "shapes/serialize.hpp"
#include "shapes/shapegen.hpp"
#include "shapes/verify.hpp"

namespace {

using namespace shapes;

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConsistency = 3;
constexpr int kExitCap = 4;

struct Common {
  unsigned threads = 1;
  std::size_t state_cap = kDefaultStateCap;
};

struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto load(const std::string& path, F parse) {
  try {
    return parse(read_json_file(path));
  } catch (const InvalidArgument& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("bad integer '" + item + "' in list '" + s + "'");
    }
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("bad number '" + item + "' in list '" + s + "'");
    }
  }
  return out;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_text_file(out_path, text);
}

// ---- poly

struct PolyArgs {
  int n = 0, d = 0;
  std::string stat = "fermion";
  bool json = false;
  std::string out;
};

int run_poly(const PolyArgs& a) {
  const auto p = shape_polynomial(a.n, a.d, parse_statistics(a.stat));
  if (a.json) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["N"] = a.n;
    j["d"] = a.d;
    j["statistics"] = to_string(parse_statistics(a.stat));
    j["shape_polynomial"] = to_json(p);
    emit(a.out, j.dump(2) + "\n");
  } else {
    emit(a.out, p.to_string() + "\n");
  }
  return 0;
}

// ---- generate

struct GenerateArgs {
  int n = 0, d = 0;
  std::string stat = "fermion";
  int max_grade = -1;
  std::string out;
  bool quiet = false;
};

int run_generate(const GenerateArgs& a, const Common& c) {
  GenerateOptions opt;
  if (a.max_grade >= 0) opt.max_grade = a.max_grade;
  opt.state_cap = c.state_cap;
  opt.threads = c.threads;
  if (!a.quiet)
    opt.on_grade = [](const GradeReport& r) {
      std::cerr << "grade " << r.grade << ": " << r.level_dimension << " states, "
                << r.trivial_products << " trivial products of rank " << r.trivial_rank << ", "
                << r.found_shapes << " new shapes\n";
    };
  const auto cat = generate_shapes(a.n, a.d, parse_statistics(a.stat), opt);
  emit(a.out, to_json(cat).dump(2) + "\n");
  std::cerr << cat.shapes.size() << " shapes through grade " << cat.max_grade
            << (cat.complete() ? " (complete)" : "") << "\n";
  return 0;
}

// ---- deflate

struct DeflateArgs {
  std::string in;
  std::string stat = "fermion";
  std::string out;
};

int run_deflate(const DeflateArgs& a, const Common& c) {
  const auto p = load(a.in, [](const Json& j) { return polynomial_from_json(j); });
  if (p.is_zero()) throw InvalidArgument("input polynomial is zero");
  const auto grade = p.grade();
  if (!grade) throw InvalidArgument("input polynomial is not homogeneous");
  const Statistics stat = parse_statistics(a.stat);
  const LevelBasis basis(p.particles(), p.dimension(), *grade, stat, c.state_cap);
  const auto coeffs = deflate(p, basis);
  Json j;
  j["format_version"] = kFormatVersion;
  j["N"] = p.particles();
  j["d"] = p.dimension();
  j["statistics"] = to_string(stat);
  j["grade"] = *grade;
  j["level_dimension"] = basis.size();
  Json states = Json::array();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Json s;
    Json orbitals = Json::array();
    for (const auto& o : basis.state(i).orbitals()) orbitals.push_back(o.exponents());
    s["state"] = std::move(orbitals);
    s["coeff"] = to_string(coeffs[i]);
    states.push_back(std::move(s));
  }
  j["states"] = std::move(states);
  emit(a.out, j.dump(2) + "\n");
  return 0;
}

// ---- schur

struct SchurArgs {
  std::string partition;
  std::string orbitals;
  int n = 0;
};

int run_schur(const SchurArgs& a) {
  if (a.partition.empty() == a.orbitals.empty())
    throw InvalidArgument("give exactly one of --partition or --orbitals");
  if (!a.partition.empty()) {
    if (a.n < 1) throw InvalidArgument("--n must be >= 1");
    const Partition lambda(parse_int_list(a.partition));
    const auto ssyt = schur_ssyt(lambda, a.n);
    const auto ratio = schur_ratio(lambda, a.n);
    if (ssyt != ratio)
      throw ConsistencyError("tableau sum and determinant ratio differ for " + lambda.to_string());
    std::cout << "s_" << lambda.to_string() << " = " << ssyt.to_string() << "\n";
    return 0;
  }
  std::vector<OrbitalVector> orbitals;
  for (int k : parse_int_list(a.orbitals)) orbitals.push_back(OrbitalVector{k});
  auto canon = SlaterState::canonicalize(orbitals, Statistics::Fermion);
  if (!canon) throw InvalidArgument("orbitals repeat; the determinant vanishes");
  const auto lambda = factor_1d(canon->first);
  std::cout << (canon->second < 0 ? "-" : "") << "s_" << lambda.to_string()
            << " * Vandermonde\n";
  return 0;
}

// ---- density

struct DensityArgs {
  std::string catalog;
  std::string shape_id;
  std::string polynomial;
  std::string realization = "hermite";
  double length = 0;
  std::string grid;
  bool pair = false;
  std::string dir1, dir2;
  std::string out;
};

int run_density(const DensityArgs& a, const Common& c) {
  if (a.catalog.empty() == a.polynomial.empty())
    throw InvalidArgument("give exactly one of --catalog (with --shape-id) or --polynomial");
  std::optional<ExactPolynomial> p;
  std::string source;
  if (!a.catalog.empty()) {
    if (a.shape_id.empty()) throw InvalidArgument("--catalog needs --shape-id");
    const auto cat = load(a.catalog, [&](const Json& j) { return catalog_from_json(j, c.state_cap); });
    p = cat.polynomial(cat.find(a.shape_id));
    source = a.shape_id;
  } else {
    p = load(a.polynomial, [](const Json& j) { return polynomial_from_json(j); });
    source = a.polynomial;
  }
  const auto r = parse_realization(a.realization, a.length);
  const auto grid = parse_grid(a.grid);
  DensityGrid rho;
  Json side;
  side["format_version"] = kFormatVersion;
  if (a.pair) {
    PairCut cut = PairCut::diagonal(p->dimension());
    if (!a.dir1.empty()) cut.dir1 = parse_double_list(a.dir1);
    if (!a.dir2.empty()) cut.dir2 = parse_double_list(a.dir2);
    rho = two_particle_density_cut(*p, r, cut, grid, static_cast<int>(c.threads));
    side["kind"] = "pair_cut";
    side["dir1"] = cut.dir1;
    side["dir2"] = cut.dir2;
  } else {
    rho = one_particle_density(*p, r, grid, static_cast<int>(c.threads));
    side["kind"] = "one_particle";
  }
  side["source"] = source;
  side["N"] = p->particles();
  side["d"] = p->dimension();
  side["realization"] = to_string(r.kind);
  side["length_scale"] = r.length_scale;
  Json axes = Json::array();
  for (const auto& ax : grid)
    axes.push_back({{"name", ax.name}, {"lo", ax.lo}, {"hi", ax.hi}, {"count", ax.count}});
  side["axes"] = std::move(axes);
  side["normalization"] = rho.normalization;
  side["grid_integral"] = rho.integral();

  std::string csv;
  for (const auto& ax : grid) csv += ax.name + ",";
  csv += "value\n";
  for (std::size_t i = 0; i < rho.size(); ++i) {
    for (double x : rho.point(i)) csv += fmt_double(x) + ",";
    csv += fmt_double(rho.values[i]) + "\n";
  }
  if (a.out.empty() || a.out == "-") {
    std::cout << csv;
  } else {
    write_text_file(a.out, csv);
    write_json_file(a.out + ".json", side);
  }
  std::cerr << "grid integral " << fmt_double(rho.integral()) << " (exact "
            << fmt_double(rho.normalization) << ")\n";
  return 0;
}

// ---- coulomb

struct CoulombArgs {
  std::string catalog;
  int grade = -1;
  bool pairwise = false;
  double length = 1.0;
  std::string out;
};

int run_coulomb(const CoulombArgs& a, const Common& c) {
  const auto cat = load(a.catalog, [&](const Json& j) { return catalog_from_json(j, c.state_cap); });
  if (a.grade < 0 || a.grade > cat.max_grade)
    throw InvalidArgument("--grade must lie within the catalog's grades (max " +
                          std::to_string(cat.max_grade) + ")");
  const auto& basis = cat.basis(a.grade);
  std::vector<std::string> labels, kinds;
  std::vector<std::vector<Rational>> states;
  for (const auto* s : cat.shapes_at(a.grade)) {
    labels.push_back("[" + s->id() + "]");
    kinds.push_back("shape");
    states.push_back(s->coeffs);
  }
  for (auto& t : trivial_states(cat, a.grade, c.state_cap)) {
    labels.push_back(t.label());
    kinds.push_back("trivial");
    states.push_back(std::move(t.coeffs));
  }
  const std::size_t n = states.size();
  std::vector<ExactPolynomial> polys;
  for (const auto& s : states) polys.push_back(materialize(s, basis));
  const Realization r = Realization::hermite(a.length);
  CoulombTable table(cat.dimension);

  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t last = a.pairwise ? n : i + 1;
    for (std::size_t j = i; j < last; ++j) jobs.emplace_back(i, j);
  }
  std::vector<double> values(jobs.size());
  {
    const unsigned workers = std::max(1u, std::min<unsigned>(c.threads, jobs.size()));
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < jobs.size(); k += workers)
          values[k] = many_body_vee(polys[jobs[k].first], polys[jobs[k].second], r, &table);
      });
  }
  std::string csv;
  if (a.pairwise) {
    std::vector<double> m(n * n);
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      m[jobs[k].first * n + jobs[k].second] = values[k];
      m[jobs[k].second * n + jobs[k].first] = values[k];
    }
    csv = "state";
    for (const auto& l : labels) csv += "," + l;
    csv += "\n";
    for (std::size_t i = 0; i < n; ++i) {
      csv += labels[i];
      for (std::size_t j = 0; j < n; ++j) csv += "," + fmt_double(m[i * n + j]);
      csv += "\n";
    }
  } else {
    csv = "state,kind,vee\n";
    for (std::size_t i = 0; i < n; ++i)
      csv += labels[i] + "," + kinds[i] + "," + fmt_double(values[i]) + "\n";
  }
  emit(a.out, csv);
  return 0;
}

// ---- verify

struct VerifyArgs {
  int n = 0, d = 0;
  std::string stat = "fermion";
  int max_grade = -1;
};

int run_verify(const VerifyArgs& a, const Common& c) {
  VerifyOptions opt;
  if (a.max_grade >= 0) opt.max_grade = a.max_grade;
  opt.state_cap = c.state_cap;
  opt.threads = c.threads;
  const Statistics stat = parse_statistics(a.stat);
  const auto results = run_invariant_suite(a.n, a.d, stat, opt);
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::cout << "invariants for N=" << a.n << " d=" << a.d << " " << to_string(stat) << "\n";
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name
              << std::string(width - r.name.size() + 2, ' ') << r.detail << "\n";
  }
  std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? 0 : kExitFailed;
}

void add_nds(CLI::App* sub, int& n, int& d, std::string& stat) {
  sub->add_option("--n", n, "particle count")->required()->check(CLI::Range(1, 64));
  sub->add_option("--d", d, "spatial dimension")->required()->check(CLI::Range(1, 16));
  sub->add_option("--stat", stat, "fermion or boson")
      ->check(CLI::IsMember({"fermion", "boson", "f", "b"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shape polynomials and shape generators of N identical particles"};
  app.require_subcommand(1);
  app.fallthrough();
  app.failure_message(CLI::FailureMessage::help);
  Common common;
  app.add_option("--threads", common.threads, "worker thread cap")->check(CLI::Range(1u, 1024u));
  app.add_option("--state-cap", common.state_cap, "largest level to enumerate")
      ->envname("SHAPES_STATE_CAP")
      ->check(CLI::PositiveNumber);

  PolyArgs poly;
  auto* s_poly = app.add_subcommand("poly", "print the shape polynomial");
  add_nds(s_poly, poly.n, poly.d, poly.stat);
  s_poly->add_flag("--json", poly.json, "emit JSON");
  s_poly->add_option("--out", poly.out, "output file (default stdout)");

  GenerateArgs gen;
  auto* s_gen = app.add_subcommand("generate", "build the shape catalog");
  add_nds(s_gen, gen.n, gen.d, gen.stat);
  s_gen->add_option("--max-grade", gen.max_grade, "last grade to process")
      ->check(CLI::NonNegativeNumber);
  s_gen->add_option("--out", gen.out, "catalog JSON file (default stdout)");
  s_gen->add_flag("--quiet", gen.quiet, "no per-grade progress");

  DeflateArgs def;
  auto* s_def = app.add_subcommand("deflate", "expand a polynomial over its level basis");
  s_def->add_option("--in", def.in, "polynomial JSON file")->required();
  s_def->add_option("--stat", def.stat, "fermion or boson")
      ->check(CLI::IsMember({"fermion", "boson", "f", "b"}));
  s_def->add_option("--out", def.out, "output file (default stdout)");

  SchurArgs sch;
  auto* s_sch = app.add_subcommand("schur", "Schur polynomials and 1D determinant factoring");
  s_sch->add_option("--partition", sch.partition, "e.g. 2,1");
  s_sch->add_option("--n", sch.n, "number of variables");
  s_sch->add_option("--orbitals", sch.orbitals, "1D orbitals to factor, e.g. 4,2,0");

  DensityArgs den;
  auto* s_den = app.add_subcommand("density", "one-particle density or pair-density cut");
  s_den->add_option("--catalog", den.catalog, "catalog JSON file");
  s_den->add_option("--shape-id", den.shape_id, "shape id grade:index");
  s_den->add_option("--polynomial", den.polynomial, "polynomial JSON file instead of a shape");
  s_den->add_option("--realization", den.realization, "hermite, box-open or box-closed")
      ->check(CLI::IsMember({"hermite", "box-open", "box-closed"}));
  s_den->add_option("--length", den.length, "oscillator length or box size");
  s_den->add_option("--grid", den.grid, "e.g. x:-4:4:81,y:-4:4:81")->required();
  s_den->add_flag("--pair", den.pair, "pair density along x1 = x*dir1, x2 = y*dir2");
  s_den->add_option("--dir1", den.dir1, "cut direction of particle 1 (default all ones)");
  s_den->add_option("--dir2", den.dir2, "cut direction of particle 2 (default all ones)");
  s_den->add_option("--out", den.out, "CSV file; a .json sidecar is written next to it");

  CoulombArgs cou;
  auto* s_cou = app.add_subcommand("coulomb", "Coulomb expectation values of a grade");
  s_cou->add_option("--catalog", cou.catalog, "catalog JSON file")->required();
  s_cou->add_option("--grade", cou.grade, "grade")->required();
  s_cou->add_flag("--pairwise", cou.pairwise, "full matrix instead of the diagonal");
  s_cou->add_option("--length", cou.length, "oscillator length")->check(CLI::PositiveNumber);
  s_cou->add_option("--out", cou.out, "CSV file (default stdout)");

  VerifyArgs ver;
  auto* s_ver = app.add_subcommand("verify", "run the invariant suite");
  add_nds(s_ver, ver.n, ver.d, ver.stat);
  s_ver->add_option("--max-grade", ver.max_grade, "last grade to check")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*s_poly) return run_poly(poly);
    if (*s_gen) return run_generate(gen, common);
    if (*s_def) return run_deflate(def, common);
    if (*s_sch) return run_schur(sch);
    if (*s_den) return run_density(den, common);
    if (*s_cou) return run_coulomb(cou, common);
    if (*s_ver) return run_verify(ver, common);
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const CapExceeded& e) {
    std::cerr << "state cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitFailed;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
