#pragma once

#include <cmath>

namespace mxr::sf {

/// Ratio Gamma(a)/Gamma(b) for positive arguments, computed in log space.
double gamma_ratio(double a, double b);

/// Surface area of the unit sphere S^{m-1} in R^m: 2 pi^{m/2} / Gamma(m/2).
double sphere_area(int m);

/// Lower incomplete gamma gamma(a, x), unnormalized, a > 0, x >= 0.
double lower_incomplete_gamma(double a, double x);

/// Regularized P(a, x) = gamma(a, x) / Gamma(a).
double gamma_p(double a, double x);

/// Legendre polynomial P_l evaluated at 0 (the Funk multiplier for degree l).
double legendre_p_zero(int l);

/// Legendre polynomial P_l(x) by the three-term recurrence.
double legendre_p(int l, double x);

inline bool near_integer(double x, double tol = 1e-12) {
  return std::abs(x - std::round(x)) <= tol;
}

}  // namespace mxr::sf
