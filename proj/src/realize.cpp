#include "shapes/realize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

#include "shapes/error.hpp"
#include "shapes/quadrature.hpp"

namespace shapes {

Realization parse_realization(const std::string& name, double length_scale) {
  Realization r;
  if (name == "hermite" || name == "oscillator")
    r = Realization::hermite();
  else if (name == "box-open" || name == "box")
    r = Realization::box_open();
  else if (name == "box-closed")
    r = Realization::box_closed();
  else
    throw InvalidArgument("unknown realization '" + name +
                          "' (expected hermite, box-open or box-closed)");
  if (length_scale > 0) r.length_scale = length_scale;
  return r;
}

std::string to_string(RealizationKind kind) {
  switch (kind) {
    case RealizationKind::HermiteOscillator: return "hermite";
    case RealizationKind::BoxOpen: return "box-open";
    case RealizationKind::BoxClosed: return "box-closed";
  }
  return "?";
}

std::vector<double> orbital_values(const Realization& r, int max_k, double x) {
  const double a = r.length_scale;
  std::vector<double> out(max_k + 1);
  switch (r.kind) {
    case RealizationKind::HermiteOscillator: {
      const double xi = x / a;
      out = hermite_values(max_k, xi);
      const double g = std::exp(-0.5 * xi * xi);
      for (double& v : out) v *= g;
      break;
    }
    case RealizationKind::BoxOpen:
      for (int k = 0; k <= max_k; ++k) out[k] = std::cos(k * Realization::kPi * x / a);
      break;
    case RealizationKind::BoxClosed:
      for (int k = 0; k <= max_k; ++k) out[k] = std::sin((k + 1) * Realization::kPi * x / a);
      break;
  }
  return out;
}

std::vector<double> overlap_table(const Realization& r, int max_k) {
  const int n = max_k + 1;
  std::vector<double> table(static_cast<std::size_t>(n) * n, 0.0);
  QuadratureRule rule;
  std::vector<double> scaled_weights;
  if (r.kind == RealizationKind::HermiteOscillator) {
    // phi_n phi_m = H_n H_m exp(-xi^2); Gauss-Hermite is exact up to degree 2q-1.
    rule = gauss_hermite(std::max(40, max_k + 1));
    for (double& x : rule.nodes) x *= r.length_scale;
    for (double& w : rule.weights) w *= r.length_scale;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double xi = rule.nodes[i] / r.length_scale;
      const auto h = hermite_values(max_k, xi);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a * n + b] += rule.weights[i] * h[a] * h[b];
    }
    return table;
  }
  rule = gauss_legendre(std::max(40, 4 * n + 8), 0.0, r.length_scale);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const auto f = orbital_values(r, max_k, rule.nodes[i]);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) table[a * n + b] += rule.weights[i] * f[a] * f[b];
  }
  return table;
}

RealizedPolynomial::RealizedPolynomial(const ExactPolynomial& p, Realization r)
    : particles_(p.particles()), dimension_(p.dimension()), realization_(r) {
  const int nd = particles_ * dimension_;
  coeffs_.reserve(p.size());
  exponents_.reserve(p.size() * nd);
  for (const auto& [m, c] : p.terms()) {
    coeffs_.push_back(c.get_d());
    for (int i = 0; i < particles_; ++i)
      for (int a = 0; a < dimension_; ++a) {
        exponents_.push_back(m.exponent(i, a));
        max_exponent_ = std::max(max_exponent_, m.exponent(i, a));
      }
  }
}

double RealizedPolynomial::operator()(std::span<const double> coords) const {
  const int nd = particles_ * dimension_;
  if (static_cast<int>(coords.size()) != nd)
    throw InvalidArgument("evaluator expects " + std::to_string(nd) + " coordinates");
  std::vector<std::vector<double>> tables(nd);
  for (int c = 0; c < nd; ++c) tables[c] = orbital_values(realization_, max_exponent_, coords[c]);
  double sum = 0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    double term = coeffs_[t];
    const int* e = &exponents_[t * nd];
    for (int c = 0; c < nd; ++c) term *= tables[c][e[c]];
    sum += term;
  }
  return sum;
}

RealizedPolynomial realize_polynomial(const ExactPolynomial& p, const Realization& r) {
  return RealizedPolynomial(p, r);
}

std::vector<GridAxis> parse_grid(const std::string& text) {
  std::vector<GridAxis> axes;
  std::stringstream ss(text);
  std::string item;
  auto parse_double = [&](const std::string& s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw InvalidArgument("bad number '" + s + "' in grid");
    return v;
  };
  while (std::getline(ss, item, ',')) {
    std::vector<std::string> parts;
    std::stringstream is(item);
    std::string part;
    while (std::getline(is, part, ':')) parts.push_back(part);
    if (parts.size() != 4)
      throw InvalidArgument("grid axis '" + item + "' is not name:lo:hi:count");
    GridAxis axis;
    axis.name = parts[0];
    axis.lo = parse_double(parts[1]);
    axis.hi = parse_double(parts[2]);
    const double count = parse_double(parts[3]);
    if (count < 1 || count != std::floor(count) || count > 1e7)
      throw InvalidArgument("grid axis '" + item + "' needs a positive integer count");
    axis.count = static_cast<int>(count);
    if (axis.count > 1 && !(axis.hi > axis.lo))
      throw InvalidArgument("grid axis '" + item + "' needs lo < hi");
    axes.push_back(axis);
  }
  if (axes.empty()) throw InvalidArgument("empty grid");
  return axes;
}

std::vector<double> DensityGrid::point(std::size_t flat) const {
  std::vector<double> x(axes.size());
  for (int a = static_cast<int>(axes.size()) - 1; a >= 0; --a) {
    x[a] = axes[a].point(static_cast<int>(flat % axes[a].count));
    flat /= axes[a].count;
  }
  return x;
}

double DensityGrid::integral() const {
  double sum = 0;
  for (std::size_t f = 0; f < values.size(); ++f) {
    std::size_t rest = f;
    double w = values[f];
    for (int a = static_cast<int>(axes.size()) - 1; a >= 0; --a) {
      const auto& ax = axes[a];
      const int i = static_cast<int>(rest % ax.count);
      rest /= ax.count;
      if (ax.count == 1) continue;
      const double h = (ax.hi - ax.lo) / (ax.count - 1);
      w *= (i == 0 || i == ax.count - 1) ? 0.5 * h : h;
    }
    sum += w;
  }
  return sum;
}

namespace {

// |Psi|^2 with every particle beyond the first `kept` integrated out,
// reduced to a quadratic form over the distinct kept-row exponent tuples.
struct ReducedDensity {
  int kept = 0;
  int dimension = 0;
  int max_exponent = 0;
  std::vector<std::vector<int>> keys;  // kept * d exponents each
  std::vector<double> form;            // keys x keys
  double norm = 0;
};

ReducedDensity reduce(const ExactPolynomial& p, const Realization& r, int kept) {
  if (p.is_zero()) throw InvalidArgument("cannot normalize the zero polynomial");
  const int n = p.particles(), d = p.dimension();
  if (kept > n) throw InvalidArgument("not enough particles for the requested density");
  ReducedDensity out;
  out.kept = kept;
  out.dimension = d;

  std::vector<double> coeffs;
  std::vector<std::vector<int>> rows;
  for (const auto& [m, c] : p.terms()) {
    coeffs.push_back(c.get_d());
    std::vector<int> e(n * d);
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < d; ++a) {
        e[i * d + a] = m.exponent(i, a);
        out.max_exponent = std::max(out.max_exponent, e[i * d + a]);
      }
    rows.push_back(std::move(e));
  }
  // Rescale so the largest coefficient is 1; the result is scale-free.
  double cmax = 0;
  for (double c : coeffs) cmax = std::max(cmax, std::abs(c));
  for (double& c : coeffs) c /= cmax;

  const int k1 = out.max_exponent + 1;
  const auto s = overlap_table(r, out.max_exponent);
  const int split = kept * d;

  std::map<std::vector<int>, int> key_index;
  std::vector<int> term_key(rows.size());
  for (std::size_t t = 0; t < rows.size(); ++t) {
    std::vector<int> key(rows[t].begin(), rows[t].begin() + split);
    auto [it, inserted] = key_index.emplace(key, static_cast<int>(key_index.size()));
    if (inserted) out.keys.push_back(key);
    term_key[t] = it->second;
  }
  const std::size_t nk = out.keys.size();
  out.form.assign(nk * nk, 0.0);

  for (std::size_t t = 0; t < rows.size(); ++t) {
    for (std::size_t u = 0; u < rows.size(); ++u) {
      double spect = coeffs[t] * coeffs[u];
      for (int c = split; c < n * d && spect != 0.0; ++c) spect *= s[rows[t][c] * k1 + rows[u][c]];
      if (spect == 0.0) continue;
      out.form[term_key[t] * nk + term_key[u]] += spect;
      double kept_overlap = 1;
      for (int c = 0; c < split; ++c) kept_overlap *= s[rows[t][c] * k1 + rows[u][c]];
      out.norm += spect * kept_overlap;
    }
  }
  if (!(out.norm > 0)) throw InvalidArgument("state has non-positive norm");
  return out;
}

template <class F>
void parallel_for(std::size_t count, int threads, F&& body) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(threads < 1 ? 1 : threads, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
}

// Evaluates the quadratic form at the kept coordinates (particle-major).
double evaluate_form(const ReducedDensity& rd, const Realization& r,
                     std::span<const double> kept_coords) {
  const int nc = rd.kept * rd.dimension;
  std::vector<std::vector<double>> tables(nc);
  for (int c = 0; c < nc; ++c) tables[c] = orbital_values(r, rd.max_exponent, kept_coords[c]);
  const std::size_t nk = rd.keys.size();
  std::vector<double> f(nk, 1.0);
  for (std::size_t k = 0; k < nk; ++k)
    for (int c = 0; c < nc; ++c) f[k] *= tables[c][rd.keys[k][c]];
  double sum = 0;
  for (std::size_t k = 0; k < nk; ++k) {
    double row = 0;
    for (std::size_t l = 0; l < nk; ++l) row += rd.form[k * nk + l] * f[l];
    sum += f[k] * row;
  }
  return std::max(0.0, sum / rd.norm);
}

std::size_t grid_size(const std::vector<GridAxis>& grid) {
  std::size_t total = 1;
  for (const auto& a : grid) total *= static_cast<std::size_t>(a.count);
  return total;
}

}  // namespace

DensityGrid one_particle_density(const ExactPolynomial& p, const Realization& r,
                                 const std::vector<GridAxis>& grid, int threads) {
  const int d = p.dimension();
  if (static_cast<int>(grid.size()) != d)
    throw InvalidArgument("one-particle grid needs " + std::to_string(d) + " axes");
  const auto rd = reduce(p, r, 1);
  DensityGrid out;
  out.axes = grid;
  out.normalization = p.particles();
  out.values.assign(grid_size(grid), 0.0);
  parallel_for(out.values.size(), threads, [&](std::size_t i) {
    const auto x = out.point(i);
    out.values[i] = p.particles() * evaluate_form(rd, r, x);
  });
  return out;
}

DensityGrid two_particle_density_cut(const ExactPolynomial& p, const Realization& r,
                                     const PairCut& cut, const std::vector<GridAxis>& grid,
                                     int threads) {
  const int d = p.dimension(), n = p.particles();
  if (n < 2) throw InvalidArgument("pair density needs at least two particles");
  if (grid.size() != 2) throw InvalidArgument("pair-density cut grid needs two axes");
  if (static_cast<int>(cut.dir1.size()) != d || static_cast<int>(cut.dir2.size()) != d)
    throw InvalidArgument("cut directions need " + std::to_string(d) + " components");
  const auto rd = reduce(p, r, 2);
  DensityGrid out;
  out.axes = grid;
  out.normalization = static_cast<double>(n) * (n - 1);
  out.values.assign(grid_size(grid), 0.0);
  parallel_for(out.values.size(), threads, [&](std::size_t i) {
    const auto xy = out.point(i);
    std::vector<double> coords(2 * d);
    for (int a = 0; a < d; ++a) {
      coords[a] = xy[0] * cut.dir1[a];
      coords[d + a] = xy[1] * cut.dir2[a];
    }
    out.values[i] = n * (n - 1) * evaluate_form(rd, r, coords);
  });
  return out;
}

}  // namespace shapes
