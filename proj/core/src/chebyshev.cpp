#include "mixedradon/chebyshev.hpp"

#include <cmath>
#include <map>

#include "mixedradon/errors.hpp"

namespace mxr::cheb {

Series::Series(double lo, double hi, std::vector<double> coeffs)
    : lo_(lo), hi_(hi), c_(std::move(coeffs)) {
  if (!(hi_ > lo_)) throw Error("chebyshev: empty interval");
}

Series Series::fit(const std::function<double(double)>& f, double lo,
                   double hi, int n) {
  if (n < 2) throw Error("chebyshev fit: need at least two nodes");
  std::vector<double> vals(n);
  double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (int m = 0; m < n; ++m) {
    double x = std::cos(M_PI * (m + 0.5) / n);
    vals[m] = f(mid + half * x);
  }
  std::vector<double> c(n, 0.0);
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int m = 0; m < n; ++m)
      s += vals[m] * std::cos(M_PI * k * (m + 0.5) / n);
    c[k] = 2.0 * s / n;
  }
  c[0] *= 0.5;
  return Series(lo, hi, std::move(c));
}

double Series::operator()(double x) const {
  double t = (2.0 * x - lo_ - hi_) / (hi_ - lo_);
  // Clenshaw
  double b1 = 0.0, b2 = 0.0;
  for (int k = static_cast<int>(c_.size()) - 1; k >= 1; --k) {
    double b0 = 2.0 * t * b1 - b2 + c_[k];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + c_[0];
}

Series Series::derivative() const {
  int n = static_cast<int>(c_.size());
  std::vector<double> d(std::max(n - 1, 1), 0.0);
  if (n >= 2) {
    std::vector<double> work(n + 1, 0.0);
    for (int k = n - 1; k >= 1; --k)
      work[k - 1] = work[k + 1] + 2.0 * k * c_[k];
    work[0] *= 0.5;
    for (int k = 0; k < n - 1; ++k) d[k] = work[k];
  }
  double scale = 2.0 / (hi_ - lo_);
  for (double& v : d) v *= scale;
  return Series(lo_, hi_, std::move(d));
}

double Series::derivative_at(double x, int q) const {
  Series s = *this;
  for (int i = 0; i < q; ++i) s = s.derivative();
  return s(x);
}

double Series::half_derivative_y(double x, int q) const {
  if (q == 0) return (*this)(x);
  if (!(x > 0.0)) throw Error("half_derivative_y: x must be positive");
  // (1/(2x) d/dx)^q f = sum_i c_i f^{(i)}(x) x^{i-2q}, by the recurrence
  // obtained from one application of (1/(2x)) d/dx to each term.
  std::map<int, double> terms;  // i -> coefficient of f^{(i)} x^{i-2m}
  terms[0] = 1.0;
  for (int m = 0; m < q; ++m) {
    std::map<int, double> next;
    for (auto [i, ci] : terms) {
      next[i + 1] += 0.5 * ci;
      next[i] += 0.5 * ci * (i - 2.0 * m);
    }
    terms = std::move(next);
  }
  std::vector<Series> derivs;
  derivs.push_back(*this);
  int imax = terms.rbegin()->first;
  for (int i = 1; i <= imax; ++i) derivs.push_back(derivs.back().derivative());
  double acc = 0.0;
  for (auto [i, ci] : terms) {
    if (ci == 0.0) continue;
    acc += ci * derivs[i](x) * std::pow(x, i - 2.0 * q);
  }
  return acc;
}

}  // namespace mxr::cheb
