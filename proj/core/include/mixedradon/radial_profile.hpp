#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mixedradon/chebyshev.hpp"

namespace mxr {

/// Power-law behavior of a radial function at the origin and at infinity:
/// f ~ r^{-zero_exponent} as r -> 0 and f ~ r^{-decay_exponent} as r -> inf,
/// the latter times (log r)^{-1} when log_factor is set. decay_exponent may
/// be +inf for super-polynomial decay. An unset zero_exponent means bounded
/// near zero.
struct DecayMeta {
  std::optional<double> zero_exponent;
  double decay_exponent = 0.0;
  bool log_factor = false;

  double zero_or(double fallback = 0.0) const {
    return zero_exponent.value_or(fallback);
  }
};

/// A radial function on (0, inf) with decay metadata. Tabulated profiles
/// interpolate between grid nodes and extend by their metadata power laws;
/// closed-form profiles wrap a deterministic evaluator. Immutable.
class RadialProfile {
public:
  enum class Kind { closed_form, tabulated };

  RadialProfile() = default;

  static RadialProfile closed_form(std::function<double(double)> f,
                                   DecayMeta meta);
  static RadialProfile tabulated(std::vector<double> grid,
                                 std::vector<double> values, DecayMeta meta);

  double operator()(double r) const;
  Kind kind() const { return kind_; }
  const DecayMeta& meta() const { return meta_; }

  const std::vector<double>& grid() const;
  const std::vector<double>& values() const;

  /// Same function with metadata replaced (values untouched).
  RadialProfile with_meta(DecayMeta meta) const;

  /// r^p * f(r), with metadata exponents shifted accordingly.
  RadialProfile times_power(double p) const;

  /// Pointwise scaling c * f(r).
  RadialProfile scaled(double c) const;

private:
  Kind kind_ = Kind::closed_form;
  std::function<double(double)> eval_;
  DecayMeta meta_;
  struct Table;
  std::shared_ptr<const Table> table_;
};

RadialProfile operator+(const RadialProfile& a, const RadialProfile& b);

/// Common closed forms used throughout the test and verification suites.
RadialProfile gaussian_profile(double width = 1.0);
RadialProfile power_profile(double lambda);             // r^{-lambda}
RadialProfile cauchy_profile(double exponent);          // (1+r^2)^{-exponent}
RadialProfile zero_profile();

/// Chebyshev materialization: fits r^{lam0} f on [0, r_hi] and extends
/// beyond r_hi by the metadata power law anchored at the edge value.
/// Keeps intermediate results of operator chains cheap to evaluate.
RadialProfile materialize(const RadialProfile& f, double r_hi, int n = 240);

/// Partial integrals of |f(r)| r^{weight_exponent} over the dyadic shells
/// [2^i a0, 2^{i+1} a0]. `divergent` is set when the shell sequence fails to
/// decay at a geometric rate, signalling a divergent tail integral.
struct ShellDiagnostic {
  std::vector<double> shell_integrals;
  bool divergent = false;
  std::string note;
};

ShellDiagnostic dyadic_shell_test(const RadialProfile& f,
                                  double weight_exponent, int n_shells = 8,
                                  double a0 = 1.0);

}  // namespace mxr
