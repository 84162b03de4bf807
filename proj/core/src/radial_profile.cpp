#include "mixedradon/radial_profile.hpp"

#include <algorithm>
#include <cmath>

#include "mixedradon/errors.hpp"
#include "mixedradon/quadrature.hpp"

namespace mxr {

struct RadialProfile::Table {
  std::vector<double> grid;    // strictly increasing, positive
  std::vector<double> values;  // finite
};

namespace {

// Barycentric Lagrange interpolation on a local stencil of up to 8 nodes,
// taken in the squared variable y = r^2.
double local_interp(const std::vector<double>& grid,
                    const std::vector<double>& values, double r) {
  int n = static_cast<int>(grid.size());
  auto it = std::lower_bound(grid.begin(), grid.end(), r);
  int idx = static_cast<int>(it - grid.begin());
  int half = 4;
  int lo = std::clamp(idx - half, 0, std::max(0, n - 2 * half));
  int count = std::min(2 * half, n);
  double y = r * r;
  // barycentric weights for the small stencil, computed directly
  double num = 0.0, den = 0.0;
  for (int i = 0; i < count; ++i) {
    double yi = grid[lo + i] * grid[lo + i];
    if (y == yi) return values[lo + i];
    double w = 1.0;
    for (int j = 0; j < count; ++j) {
      if (j == i) continue;
      double yj = grid[lo + j] * grid[lo + j];
      w /= (yi - yj);
    }
    double t = w / (y - yi);
    num += t * values[lo + i];
    den += t;
  }
  return num / den;
}

double tail_extension(double edge_r, double edge_v, const DecayMeta& meta,
                      double r) {
  if (edge_v == 0.0) return 0.0;
  if (std::isinf(meta.decay_exponent)) {
    // super-polynomial decay modeled on the squared variable
    return edge_v * std::exp(-(r * r - edge_r * edge_r));
  }
  double v = edge_v * std::pow(r / edge_r, -meta.decay_exponent);
  if (meta.log_factor && r > 1.0 && edge_r > 1.0)
    v *= std::log(edge_r) / std::log(r);
  return v;
}

}  // namespace

RadialProfile RadialProfile::closed_form(std::function<double(double)> f,
                                         DecayMeta meta) {
  RadialProfile p;
  p.kind_ = Kind::closed_form;
  p.eval_ = std::move(f);
  p.meta_ = meta;
  return p;
}

RadialProfile RadialProfile::tabulated(std::vector<double> grid,
                                       std::vector<double> values,
                                       DecayMeta meta) {
  if (grid.size() != values.size() || grid.size() < 2)
    throw Error("tabulated profile: grid and values must match, size >= 2");
  for (size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || (i > 0 && !(grid[i] > grid[i - 1])))
      throw Error("tabulated profile: grid must be positive and increasing");
    if (!std::isfinite(values[i]))
      throw Error("tabulated profile: values must be finite");
  }
  RadialProfile p;
  p.kind_ = Kind::tabulated;
  p.meta_ = meta;
  auto table = std::make_shared<Table>();
  table->grid = std::move(grid);
  table->values = std::move(values);
  p.table_ = table;
  auto t = p.table_;
  auto m = meta;
  p.eval_ = [t, m](double r) -> double {
    const auto& g = t->grid;
    const auto& v = t->values;
    if (r <= g.front()) {
      double lam0 = m.zero_or(0.0);
      return v.front() * std::pow(r / g.front(), -lam0);
    }
    if (r >= g.back()) return tail_extension(g.back(), v.back(), m, r);
    return local_interp(g, v, r);
  };
  return p;
}

double RadialProfile::operator()(double r) const {
  if (!eval_) throw Error("empty RadialProfile");
  return eval_(r);
}

const std::vector<double>& RadialProfile::grid() const {
  if (!table_) throw Error("RadialProfile::grid: not a tabulated profile");
  return table_->grid;
}

const std::vector<double>& RadialProfile::values() const {
  if (!table_) throw Error("RadialProfile::values: not a tabulated profile");
  return table_->values;
}

RadialProfile RadialProfile::with_meta(DecayMeta meta) const {
  RadialProfile p = *this;
  p.meta_ = meta;
  return p;
}

RadialProfile RadialProfile::times_power(double p) const {
  DecayMeta m = meta_;
  m.zero_exponent = m.zero_or(0.0) - p;
  if (!std::isinf(m.decay_exponent)) m.decay_exponent -= p;
  auto base = *this;
  return closed_form([base, p](double r) { return std::pow(r, p) * base(r); },
                     m);
}

RadialProfile RadialProfile::scaled(double c) const {
  auto base = *this;
  return closed_form([base, c](double r) { return c * base(r); }, meta_);
}

RadialProfile operator+(const RadialProfile& a, const RadialProfile& b) {
  DecayMeta m;
  m.zero_exponent = std::max(a.meta().zero_or(0.0), b.meta().zero_or(0.0));
  m.decay_exponent = std::min(a.meta().decay_exponent, b.meta().decay_exponent);
  m.log_factor = a.meta().log_factor || b.meta().log_factor;
  return RadialProfile::closed_form(
      [a, b](double r) { return a(r) + b(r); }, m);
}

RadialProfile gaussian_profile(double width) {
  double w2 = width * width;
  return RadialProfile::closed_form(
      [w2](double r) { return std::exp(-r * r / w2); },
      DecayMeta{0.0, std::numeric_limits<double>::infinity(), false});
}

RadialProfile power_profile(double lambda) {
  return RadialProfile::closed_form(
      [lambda](double r) { return std::pow(r, -lambda); },
      DecayMeta{lambda, lambda, false});
}

RadialProfile cauchy_profile(double exponent) {
  return RadialProfile::closed_form(
      [exponent](double r) { return std::pow(1.0 + r * r, -exponent); },
      DecayMeta{0.0, 2.0 * exponent, false});
}

RadialProfile zero_profile() {
  return RadialProfile::closed_form(
      [](double) { return 0.0; },
      DecayMeta{0.0, std::numeric_limits<double>::infinity(), false});
}

RadialProfile materialize(const RadialProfile& f, double r_hi, int n) {
  double lam0 = f.meta().zero_or(0.0);
  auto regular = [f, lam0](double r) { return std::pow(r, lam0) * f(r); };
  cheb::Series series = cheb::Series::fit(regular, 0.0, r_hi, n);
  DecayMeta meta = f.meta();
  double edge_v = series(r_hi) * std::pow(r_hi, -lam0);
  return RadialProfile::closed_form(
      [series, lam0, meta, r_hi, edge_v](double r) -> double {
        if (r >= r_hi) return tail_extension(r_hi, edge_v, meta, r);
        return series(r) * std::pow(r, -lam0);
      },
      meta);
}

ShellDiagnostic dyadic_shell_test(const RadialProfile& f,
                                  double weight_exponent, int n_shells,
                                  double a0) {
  ShellDiagnostic diag;
  auto g = [&](double r) {
    return std::abs(f(r)) * std::pow(r, weight_exponent);
  };
  double lo = a0;
  for (int i = 0; i < n_shells; ++i) {
    double hi = 2.0 * lo;
    diag.shell_integrals.push_back(quad::panel(g, lo, hi, 48));
    lo = hi;
  }
  // geometric average ratio over the trailing shells; near 1 means the
  // partial integrals keep growing without bound
  int m = n_shells;
  double num = 0.0;
  int cnt = 0;
  for (int i = std::max(1, m - 4); i < m; ++i) {
    double prev = diag.shell_integrals[i - 1];
    double cur = diag.shell_integrals[i];
    if (prev > 0.0 && cur > 0.0) {
      num += std::log(cur / prev);
      ++cnt;
    }
  }
  if (cnt == 0) {
    diag.divergent = false;
    diag.note = "shells vanish";
    return diag;
  }
  double mean_ratio = std::exp(num / cnt);
  diag.divergent = mean_ratio >= 0.85;
  diag.note = "trailing shell ratio " + std::to_string(mean_ratio);
  return diag;
}

}  // namespace mxr
