// Acceptance run: one PASS/FAIL line per criterion, each under a time limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "random_poly.hpp"
#include "shapes/coulomb.hpp"
#include "shapes/counting.hpp"
#include "shapes/deflation.hpp"
#include "shapes/linalg.hpp"
#include "shapes/realize.hpp"
#include "shapes/schur.hpp"
#include "shapes/shapegen.hpp"
#include "shapes/slater.hpp"

using namespace shapes;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

using Vec = std::vector<Rational>;

GradedQPolynomial poly(int lowest, std::vector<long> coeffs) {
  std::vector<Integer> c;
  for (long v : coeffs) c.emplace_back(v);
  return GradedQPolynomial::from_coefficients(lowest, c);
}

Integer big(std::size_t v) { return Integer(static_cast<unsigned long>(v)); }

Vec combo(const LevelBasis& basis, const std::vector<std::pair<long, std::vector<OrbitalVector>>>& dets) {
  Vec v(basis.size(), Rational(0));
  for (const auto& [coeff, rows] : dets) {
    const auto c = SlaterState::canonicalize(rows, basis.statistics());
    require(c.has_value(), "repeated orbital in a determinant");
    const long i = basis.index_of(c->first);
    require(i >= 0, "determinant outside the level");
    v[i] += Rational(coeff * c->second);
  }
  return v;
}

std::vector<Vec> shape_vectors(const ShapeCatalog& cat, int grade) {
  std::vector<Vec> out;
  for (const auto* s : cat.shapes_at(grade)) out.push_back(s->coeffs);
  return out;
}

ExactPolynomial det(std::vector<OrbitalVector> rows) {
  auto c = SlaterState::canonicalize(std::move(rows), Statistics::Fermion);
  require(c.has_value(), "repeated orbital");
  return expand_state(c->first).scaled(c->second);
}

// ---------------------------------------------------------------------------

std::string golden_polynomials() {
  require(shape_polynomial(3, 2, Statistics::Fermion) == poly(2, {1, 4, 1}), "P_2(3)");
  require(shape_polynomial(3, 3, Statistics::Fermion) == poly(2, {3, 10, 6, 6, 7, 3, 0, 1}), "P_3(3)");
  require(shape_polynomial(3, 3, Statistics::Boson) == poly(0, {1, 0, 3, 7, 6, 6, 10, 3}), "B_3(3)");
  require(shape_polynomial(2, 3, Statistics::Fermion) == poly(1, {3, 0, 1}), "P_3(2)");
  return "P2(3), P3(3), B3(3), P3(2) exact";
}

std::string saturation() {
  int checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= 3; ++d)
      for (auto st : {Statistics::Fermion, Statistics::Boson}) {
        Integer fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        Integer expect = 1;
        for (int k = 1; k < d; ++k) expect *= fact;
        require(shape_polynomial(n, d, st).evaluate_at_one() == expect,
                "P(1) != N!^(d-1) at N=" + std::to_string(n) + " d=" + std::to_string(d));
        ++checked;
      }
  return std::to_string(checked) + " cases";
}

std::string symmetry() {
  for (int n = 1; n <= 5; ++n)
    for (auto st : {Statistics::Fermion, Statistics::Boson}) {
      const auto list = shape_polynomial(n, 2, st).coefficient_list();
      require(std::equal(list.begin(), list.end(), list.rbegin()),
               "d=2 not palindromic at N=" + std::to_string(n));
    }
  for (int n = 1; n <= 4; ++n) {
    auto f = shape_polynomial(n, 3, Statistics::Fermion).coefficient_list();
    const auto b = shape_polynomial(n, 3, Statistics::Boson).coefficient_list();
    std::reverse(f.begin(), f.end());
    require(f == b, "d=3 mirror fails at N=" + std::to_string(n));
  }
  return "palindromes N<=5, mirrors N<=4";
}

std::string level_dimensions() {
  std::ostringstream out;
  for (auto [n, d, g, expect] : {std::tuple{3, 2, 3, 6}, {3, 2, 4, 14}, {3, 3, 9, 3838}}) {
    const auto poly = shape_polynomial(n, d, Statistics::Fermion);
    const auto series = poly * euler_factor(n, g).pow(d);
    require(series.coefficient(g) == expect, "series coefficient");
    require(level_dimension(n, d, g, Statistics::Fermion) == expect, "level_dimension");
    const auto states = enumerate_basis(n, d, g, Statistics::Fermion);
    require(static_cast<long>(states.size()) == expect, "enumeration");
    out << "(" << n << "," << d << ",g" << g << ")=" << states.size() << " ";
  }
  return out.str() + "series and enumeration";
}

std::string worked_example() {
  const LevelBasis l2(3, 2, 2, Statistics::Fermion), l3(3, 2, 3, Statistics::Fermion);
  const OrbitalVector t{1, 0}, u{0, 1}, one{0, 0}, tu{1, 1}, tt{2, 0}, uu{0, 2}, tuu{1, 2}, ttu{2, 1};
  const auto g0 = expand_state(l2.state(0));
  require(deflate(elementary_symmetric(1, 0, 3, 2) * g0, l3) ==
              combo(l3, {{-1, {tu, t, one}}, {1, {tt, u, one}}}),
          "e1(t) g0 != -g12 + g14");
  require(deflate(elementary_symmetric(1, 1, 3, 2) * g0, l3) ==
              combo(l3, {{-1, {uu, t, one}}, {1, {tu, u, one}}}),
          "e1(u) g0 != -g13 + g15");

  const auto cat = generate_shapes(3, 2, Statistics::Fermion);
  const std::vector<Vec> grade3_span = {
      combo(l3, {{1, {tt, t, one}}}), combo(l3, {{1, {tu, t, one}}, {1, {tt, u, one}}}),
      combo(l3, {{1, {uu, t, one}}, {1, {tu, u, one}}}), combo(l3, {{1, {uu, u, one}}})};
  require(same_subspace(shape_vectors(cat, 3), grade3_span, static_cast<int>(l3.size())), "grade 3 complement");
  const auto& l4 = cat.basis(4);
  const Vec grade4_shape = combo(l4, {{1, {tuu, t, one}}, {-1, {ttu, u, one}}, {1, {tt, uu, one}}, {-1, {tu, t, u}}});
  require(same_subspace(shape_vectors(cat, 4), {grade4_shape}, static_cast<int>(l4.size())), "grade 4 complement");
  return "Euler states, grade 3 and grade 4 complements";
}

std::string full_catalogs() {
  const auto c23 = generate_shapes(2, 3, Statistics::Fermion);
  require(c23.shapes.size() == 4, "(2,3) shape count");
  auto x = [](int p, int a) { return ExactPolynomial::variable(2, 3, p, a); };
  const auto dt = x(0, 0) - x(1, 0), du = x(0, 1) - x(1, 1), dv = x(0, 2) - x(1, 2);
  const auto& b1 = c23.basis(1);
  const auto& b3 = c23.basis(3);
  require(same_subspace(shape_vectors(c23, 1), {deflate(dt, b1), deflate(du, b1), deflate(dv, b1)},
                        static_cast<int>(b1.size())),
          "(2,3) grade 1 shapes");
  require(same_subspace(shape_vectors(c23, 3), {deflate(dt * du * dv, b3)}, static_cast<int>(b3.size())),
          "(2,3) grade 3 shape");

  GenerateOptions opt;
  opt.threads = std::max(1u, std::thread::hardware_concurrency());
  GradeReport last;
  opt.on_grade = [&](const GradeReport& r) { last = r; };
  const auto c33 = generate_shapes(3, 3, Statistics::Fermion, opt);
  require(c33.shapes.size() == 36, "(3,3) shape count");
  const auto p = poly(2, {3, 10, 6, 6, 7, 3, 0, 1});
  for (int g = 0; g <= 9; ++g) require(big(c33.shapes_at(g).size()) == p.coefficient(g), "(3,3) grade count");
  require(last.grade == 9 && last.level_dimension - last.trivial_rank == 1 && last.found_shapes == 1,
          "grade 9 complement dimension");
  std::ostringstream out;
  out << "(2,3): 4 shapes; (3,3): 36 shapes, grade 9 level " << last.level_dimension << " rank "
      << last.trivial_rank;
  return out.str();
}

std::string schur_oracle() {
  int lambdas = 0, dets = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int w = 0; w <= 6; ++w)
      for (const auto& lambda : partitions_of(w, n)) {
        require(schur_ssyt(lambda, n) == schur_ratio(lambda, n), "SSYT != ratio for " + lambda.to_string());
        ++lambdas;
      }
    for (int k = 1; k <= n; ++k)
      require(schur_ssyt(Partition(std::vector<int>(k, 1)), n) == elementary_symmetric(k, 0, n, 1),
              "s_{1^k} != e_k");
    std::vector<int> pick(n);
    std::function<void(int, int)> rec = [&](int pos, int below) {
      if (pos == n) {
        std::vector<OrbitalVector> rows;
        for (int k : pick) rows.push_back(OrbitalVector{k});
        const SlaterState s(rows, Statistics::Fermion);
        require(divide_exact(expand_state(s), vandermonde(n, 0, 1)) == schur_ssyt(factor_1d(s), n),
                "1D determinant does not factor");
        ++dets;
        return;
      }
      for (int k = below - 1; k >= n - 1 - pos; --k) {
        pick[pos] = k;
        rec(pos + 1, k);
      }
    };
    rec(0, 9);
  }
  return std::to_string(lambdas) + " (lambda, N) pairs, " + std::to_string(dets) + " determinants";
}

std::string deflation_round_trip() {
  int units = 0;
  for (auto st : {Statistics::Fermion, Statistics::Boson})
    for (int n = 1; n <= 3; ++n)
      for (int d = 1; d <= 2; ++d)
        for (int g = 0; g <= 6; ++g) {
          const LevelBasis b(n, d, g, st);
          for (std::size_t i = 0; i < b.size(); ++i) {
            Vec e(b.size(), Rational(0));
            e[i] = 1;
            require(deflate(b.expansion(i), b) == e, "basis state is not a unit vector");
            ++units;
          }
        }
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 3, d = 1 + (trial / 3) % 2, g = static_cast<int>(rng() % 7);
    const auto p = testing_support::random_symmetrized(rng, n, d, g, true);
    const LevelBasis b(n, d, g, Statistics::Fermion);
    require(materialize(deflate(p, b), b) == p, "random polynomial does not reconstruct");
  }
  return std::to_string(units) + " unit vectors, 100 random polynomials";
}

std::string coulomb() {
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 6; ++m) {
      const auto lin = hermite_linearization(n, m);
      const auto ref = oracle::to_hermite_basis(oracle::dense_mul(oracle::hermite_poly(n), oracle::hermite_poly(m)));
      require(lin.size() == ref.size(), "linearization length");
      for (std::size_t k = 0; k < lin.size(); ++k) require(Rational(lin[k]) == ref[k], "linearization");
    }
  for (int l = 0; l <= 30; l += 2) {
    require(beta_integral(3, l).rational == Rational(1, l + 1) && beta_integral(3, l).pi_power == 0, "I_3");
    Integer c = 1;
    for (int i = 1; i <= l / 2; ++i) c = c * (l / 2 + i) / i;
    Rational expect(c, Integer(1) << (l + 1));
    expect.canonicalize();
    require(beta_integral(2, l).rational == expect && beta_integral(2, l).pi_power == 1, "I_2");
  }

  const oracle::CoulombQuadrature q(2);
  std::ostringstream out;
  for (int d : {2, 3}) {
    CoulombTable table(d);
    const int len = 4 * d;
    std::vector<int> t(len, 0);
    double worst = 0;
    long count = 0;
    while (true) {
      const std::span<const int> s(t);
      const auto n = s.subspan(0, d), np = s.subspan(d, d), m = s.subspan(2 * d, d), mp = s.subspan(3 * d, d);
      const double exact = CoulombExact{table.element(n, np, m, mp), coulomb_half_pi_power(d)}.value();
      const double num = q.element({n.begin(), n.end()}, {np.begin(), np.end()}, {m.begin(), m.end()},
                                   {mp.begin(), mp.end()});
      const double err = exact == 0 ? std::abs(num) : std::abs(num - exact) / std::abs(exact);
      worst = std::max(worst, err);
      ++count;
      int k = 0;
      while (k < len && t[k] == 2) t[k++] = 0;
      if (k == len) break;
      ++t[k];
    }
    require(worst < 1e-6, "quadrature deviation " + std::to_string(worst) + " in d=" + std::to_string(d));
    out << "d=" << d << ": " << count << " elements, worst rel " << worst << "; ";
  }
  return out.str() + "linearization and I_d exact";
}

std::string densities() {
  const auto r = Realization::hermite();
  const std::vector<GridAxis> g2 = {{"x", -7, 7, 141}, {"y", -7, 7, 141}};
  const auto s12 = det({{1, 1}, {1, 0}, {0, 0}}) + det({{2, 0}, {0, 1}, {0, 0}});
  const auto e1g0 = elementary_symmetric(1, 0, 3, 2) * det({{1, 0}, {0, 1}, {0, 0}});
  const auto a = one_particle_density(s12, r, g2), b = one_particle_density(e1g0, r, g2);
  double diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a.values[i] - b.values[i]));
  require(diff < 1e-8, "S12 and e1(t) g0 densities differ by " + std::to_string(diff));

  double worst_norm = 0;
  auto check_norm = [&](const ExactPolynomial& p, const std::vector<GridAxis>& grid, const Realization& re) {
    const auto rho = one_particle_density(p, re, grid);
    worst_norm = std::max(worst_norm, std::abs(rho.integral() - p.particles()));
  };
  const auto cat = generate_shapes(3, 2, Statistics::Fermion);
  for (const auto& s : cat.shapes) check_norm(cat.polynomial(s), g2, r);
  check_norm(e1g0, g2, r);
  for (const auto& t : trivial_states(cat, 4)) check_norm(materialize(t.coeffs, cat.basis(4)), g2, r);
  const auto c23 = generate_shapes(2, 3, Statistics::Fermion);
  const std::vector<GridAxis> g3 = {{"x", -7, 7, 57}, {"y", -7, 7, 57}, {"z", -7, 7, 57}};
  for (const auto& s : c23.shapes) check_norm(c23.polynomial(s), g3, r);
  const double pi = std::numbers::pi;
  for (const auto& s : cat.shapes_at(3))
    check_norm(cat.polynomial(*s), {{"x", 0, pi, 201}, {"y", 0, pi, 201}}, Realization::box_closed());
  require(worst_norm < 1e-6, "density normalization off by " + std::to_string(worst_norm));

  auto x = [](int p, int ax) { return ExactPolynomial::variable(2, 3, p, ax); };
  const auto dv = x(0, 2) - x(1, 2);
  const auto psi4 = (x(0, 0) - x(1, 0)) * (x(0, 1) - x(1, 1));
  std::vector<ExactPolynomial> phis = {ExactPolynomial::constant(2, 3, 1), psi4};
  for (int deg = 1; deg <= 3; ++deg)
    for (const auto& e : enumerate_euler_monomials(2, 3, deg)) {
      phis.push_back(e.materialize());
      phis.push_back(e.materialize() * psi4);
    }
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  double worst_node = 0;
  for (const auto& phi : phis) {
    const auto f = realize_polynomial(dv * phi, r);
    for (int k = 0; k < 100; ++k) {
      const double z = u(rng);
      const double pt[] = {u(rng), u(rng), z, u(rng), u(rng), z};
      worst_node = std::max(worst_node, std::abs(f(pt)));
    }
  }
  require(worst_node < 1e-12, "node violation " + std::to_string(worst_node));
  std::ostringstream out;
  out << "S12 vs e1(t)g0 max diff " << diff << ", worst |integral - N| " << worst_norm << ", "
      << phis.size() << " node families, worst " << worst_node;
  return out.str();
}

std::string separation() {
  const auto cat = generate_shapes(3, 2, Statistics::Fermion);
  const auto& basis = cat.basis(4);
  const auto& s2 = cat.find("4:0");
  std::vector<int> support;
  Vec restricted;
  for (std::size_t i = 0; i < s2.coeffs.size(); ++i)
    if (s2.coeffs[i] != 0) {
      support.push_back(static_cast<int>(i));
      restricted.push_back(s2.coeffs[i]);
    }
  require(support.size() == 4, "S2 support");
  const auto comp = orthogonal_complement({restricted}, 4);
  require(comp.size() == 3, "multiplet size");
  CoulombTable table(2);
  const auto r = Realization::hermite();
  const double vs = many_body_vee(s2.coeffs, s2.coeffs, basis, r, &table);
  std::ostringstream out;
  out << "<S2|V|S2> = " << vs << "; partners:";
  for (const auto& c : comp) {
    Vec full(basis.size(), Rational(0));
    for (std::size_t k = 0; k < 4; ++k) full[support[k]] = c[k];
    const double v = many_body_vee(full, full, basis, r, &table);
    require(std::abs(v - vs) > 1e-6 * vs, "partner degenerate with S2");
    out << " " << v << " (gap " << (v - vs) / vs << ")";
  }
  std::cout << "      report: " << out.str() << "\n";
  return out.str();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden shape polynomials", 1, golden_polynomials},
      {2, "saturation law", 10, saturation},
      {3, "symmetry laws", 10, symmetry},
      {4, "level dimensions", 60, level_dimensions},
      {5, "worked example N=3 d=2", 5, worked_example},
      {6, "full catalogs (2,3) and (3,3)", 1800, full_catalogs},
      {7, "Schur oracle", 60, schur_oracle},
      {8, "deflation round trip", 60, deflation_round_trip},
      {9, "Coulomb elements", 300, coulomb},
      {10, "density properties", 300, densities},
      {11, "Coulomb shape separation", 60, separation},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.limit_seconds) {
      ok = false;
      detail += " [over time limit]";
    }
    failed += !ok;
    std::printf("%s %2d %-32s %8.2f s (limit %g s)  %s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                c.limit_seconds, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
