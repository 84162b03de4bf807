#include "mixedradon/special_functions.hpp"

#include <limits>
#include <stdexcept>

#include "mixedradon/errors.hpp"

namespace mxr::sf {

double gamma_ratio(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw Error("gamma_ratio requires positive arguments");
  return std::exp(std::lgamma(a) - std::lgamma(b));
}

double sphere_area(int m) {
  if (m < 1) throw Error("sphere_area: dimension must be >= 1");
  return 2.0 * std::exp(0.5 * m * std::log(M_PI) - std::lgamma(0.5 * m));
}

namespace {

// Series expansion of P(a,x), effective for x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int k = 1; k < 512; ++k) {
    term *= x / (a + k);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a,x) = 1 - P(a,x), effective for x >= a + 1.
double gamma_q_cont_frac(double a, double x) {
  const double tiny = std::numeric_limits<double>::min() * 16;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double f = d;
  for (int i = 1; i < 512; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return f * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_p(double a, double x) {
  if (!(a > 0.0)) throw Error("gamma_p: a must be positive");
  if (x < 0.0) throw Error("gamma_p: x must be nonnegative");
  if (x == 0.0) return 0.0;
  return (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cont_frac(a, x);
}

double lower_incomplete_gamma(double a, double x) {
  return gamma_p(a, x) * std::exp(std::lgamma(a));
}

double legendre_p_zero(int l) {
  if (l < 0) throw Error("legendre_p_zero: negative degree");
  if (l % 2 == 1) return 0.0;
  // P_{2m}(0) = (-1)^m (2m-1)!! / (2m)!!
  int m = l / 2;
  double v = 1.0;
  for (int i = 1; i <= m; ++i) v *= -(2.0 * i - 1.0) / (2.0 * i);
  return v;
}

double legendre_p(int l, double x) {
  if (l < 0) throw Error("legendre_p: negative degree");
  if (l == 0) return 1.0;
  double pm1 = 1.0, p = x;
  for (int k = 2; k <= l; ++k) {
    double pn = ((2.0 * k - 1.0) * x * p - (k - 1.0) * pm1) / k;
    pm1 = p;
    p = pn;
  }
  return p;
}

}  // namespace mxr::sf
