#pragma once

#include <functional>
#include <vector>

namespace mxr::quad {

/// Nodes and weights of a Gauss rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b on [-1,1], a,b > -1.
/// Computed by Golub-Welsch from the monic Jacobi recurrence; cached.
const GaussRule& gauss_jacobi(int n, double a, double b);

/// Gauss-Legendre rule (Jacobi with a = b = 0).
const GaussRule& gauss_legendre(int n);

/// Integral of w(y) g(y) over [lo, hi] where w(y) = (hi-y)^a (y-lo)^b.
/// The weight is part of the rule; g is evaluated at the mapped nodes.
double weighted_panel(const std::function<double(double)>& g, double lo,
                      double hi, double a, double b, int n);

/// Plain Gauss-Legendre panel over [lo, hi].
double panel(const std::function<double(double)>& g, double lo, double hi,
             int n);

/// Double-exponential rule for integrals over the whole real line with
/// integrands decaying at least like |u|^{-p}, p > 1. `scale` sets the
/// central lobe width.
double real_line(const std::function<double(double)>& g, double scale, int n);

}  // namespace mxr::quad
