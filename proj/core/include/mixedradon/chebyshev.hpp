#pragma once

#include <functional>
#include <vector>

namespace mxr::cheb {

/// Chebyshev series model of a function on [lo, hi].
class Series {
public:
  Series() = default;
  Series(double lo, double hi, std::vector<double> coeffs);

  /// Fit from function values at the n Chebyshev points of the first kind
  /// (no endpoint evaluations).
  static Series fit(const std::function<double(double)>& f, double lo,
                    double hi, int n);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  const std::vector<double>& coeffs() const { return c_; }

  double operator()(double x) const;

  /// d/dx as a new series on the same interval.
  Series derivative() const;

  /// Value of (d/dx)^q at x, differentiating the series analytically.
  double derivative_at(double x, int q) const;

  /// Value at x of (1/(2x) d/dx)^q applied to this series. This is the
  /// operator d/dy in the squared variable y = x^2; x must stay positive.
  double half_derivative_y(double x, int q) const;

private:
  double lo_ = -1.0, hi_ = 1.0;
  std::vector<double> c_;
};

}  // namespace mxr::cheb
