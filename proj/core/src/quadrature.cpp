#include "mixedradon/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "mixedradon/errors.hpp"

namespace mxr::quad {

namespace {

// Monic Jacobi recurrence coefficients (Gautschi's r_jacobi).
void jacobi_recurrence(int n, double a, double b, std::vector<double>& alpha,
                       std::vector<double>& beta) {
  alpha.resize(n);
  beta.resize(n);
  double ab = a + b;
  alpha[0] = (b - a) / (ab + 2.0);
  beta[0] = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                     std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
  if (n == 1) return;
  alpha[1] = (b * b - a * a) / ((ab + 2.0) * (ab + 4.0));
  beta[1] = 4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
  for (int k = 2; k < n; ++k) {
    double t = 2.0 * k + ab;
    alpha[k] = (b * b - a * a) / (t * (t + 2.0));
    beta[k] = 4.0 * k * (k + a) * (k + b) * (k + ab) /
              (t * t * (t + 1.0) * (t - 1.0));
  }
}

GaussRule golub_welsch(int n, double a, double b) {
  std::vector<double> alpha, beta;
  jacobi_recurrence(n, a, b, alpha, beta);
  Eigen::VectorXd diag(n), sub(n > 1 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) diag[i] = alpha[i];
  for (int i = 0; i + 1 < n; ++i) sub[i] = std::sqrt(beta[i + 1]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub);
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()[i];
    double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = beta[0] * v0 * v0;
  }
  return rule;
}

std::mutex cache_mutex;
std::map<std::tuple<int, long long, long long>, GaussRule> rule_cache;

long long key_of(double x) {
  return static_cast<long long>(std::llround(x * 1e9));
}

}  // namespace

const GaussRule& gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw Error("gauss_jacobi: need at least one node");
  if (!(a > -1.0) || !(b > -1.0))
    throw Error("gauss_jacobi: exponents must exceed -1");
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_tuple(n, key_of(a), key_of(b));
  auto it = rule_cache.find(key);
  if (it == rule_cache.end())
    it = rule_cache.emplace(key, golub_welsch(n, a, b)).first;
  return it->second;
}

const GaussRule& gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

double weighted_panel(const std::function<double(double)>& g, double lo,
                      double hi, double a, double b, int n) {
  if (!(hi > lo)) return 0.0;
  const GaussRule& rule = gauss_jacobi(n, a, b);
  double h = 0.5 * (hi - lo);
  // (hi-y)^a (y-lo)^b dy = h^{a+b+1} (1-x)^a (1+x)^b dx
  double scale = std::pow(h, a + b + 1.0);
  double acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    double y = lo + h * (rule.nodes[i] + 1.0);
    acc += rule.weights[i] * g(y);
  }
  return scale * acc;
}

double panel(const std::function<double(double)>& g, double lo, double hi,
             int n) {
  return weighted_panel(g, lo, hi, 0.0, 0.0, n);
}

double real_line(const std::function<double(double)>& g, double scale,
                 int n) {
  // u = scale * sinh(beta * sinh(w)) on a uniform w-grid.
  const double beta = 1.0;
  const double W = 3.4;
  double h = 2.0 * W / (n - 1);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    double w = -W + i * h;
    double sw = std::sinh(w);
    double u = scale * std::sinh(beta * sw);
    double du = scale * beta * std::cosh(w) * std::cosh(beta * sw);
    acc += g(u) * du;
  }
  return acc * h;
}

}  // namespace mxr::quad
