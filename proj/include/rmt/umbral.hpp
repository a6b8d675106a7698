#pragma once

// Ramanujan master theorem machinery in umbral form. A function given by
//   f(x) = sum_r (-x)^r phi(r) / r!
// is read as the pseudo-exponential exp(-c x) phi(0) with c^r phi(0) = phi(r),
// and integrals of f reduce to ordinary exponential or Gaussian integrals in
// which c is finally replaced by evaluation of phi.

#include <cmath>
#include <numbers>

#include "coefficient.hpp"
#include "error.hpp"
#include "series.hpp"
#include "special.hpp"

namespace rmt {

/// g_m(x) = exp(-c x^m) phi(0) = sum_r (-x^m)^r phi(r) / r!.
inline SeriesValue pseudo_exp(const CoefficientFn& phi, double x, int m = 1,
                              const SeriesOptions& opts = {}) {
  if (m < 1) throw DomainError("pseudo_exp: m must be >= 1");
  const double y = -std::pow(x, m);
  double base = 1.0;  // y^r / r!
  return sum_terms(
      [&](int r) {
        if (r > 0) base *= y / r;
        return base * phi(r);
      },
      opts);
}

/// Mellin transform of the pseudo-exponential:
///   int_0^inf x^(nu-k) g_m(x) dx = (1/m) Gamma(s) phi(-s),  s = (nu+1-k)/m.
inline double rmt_mellin(const CoefficientFn& phi, double nu, int m = 1, double k = 1.0) {
  if (m < 1) throw DomainError("rmt_mellin: m must be >= 1");
  const double s = (nu + 1.0 - k) / m;
  if (detail::is_nonpositive_integer(s))
    throw PoleError("rmt_mellin: Gamma pole at s = (nu+1-k)/m");
  if (!(s > 0.0)) throw DomainError("rmt_mellin: requires (nu+1-k)/m > 0");
  return gamma(s) * phi(-s) / m;
}

/// Pseudo-Gaussian integral
///   int_R exp(b x) exp(-c x^2) dx phi(0) = sqrt(pi) sum_r b^(2r) phi(-r-1/2) / (4^r r!).
inline SeriesValue pseudo_gauss(const CoefficientFn& phi, double b,
                                const SeriesOptions& opts = {}) {
  const double q = 0.25 * b * b;
  double base = 1.0;  // (b^2/4)^r / r!
  SeriesValue s = sum_terms(
      [&](int r) {
        if (r > 0) base *= q / r;
        return base * phi(-r - 0.5);
      },
      opts);
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  s.value *= sqrt_pi;
  s.error_estimate *= sqrt_pi;
  return s;
}

/// Product-integral extension with scales:
///   int_R f(a x) g(b x) dx = (sqrt(pi)/|b|) sum_r (a/b)^(2r) phi(2r) sigma(-r-1/2) / (4^r r!)
/// for f(x) = sum (-x)^r phi(r)/r! and g(x) = sum (-x^2)^s sigma(s)/s!.
inline SeriesValue product_integral(const CoefficientFn& phi, const CoefficientFn& sigma,
                                    double a, double b, const SeriesOptions& opts = {}) {
  if (b == 0.0) throw DomainError("product_integral: b must be non-zero");
  const double ratio = a / b;
  const double q = 0.25 * ratio * ratio;
  double base = 1.0;  // (a/b)^(2r) / (4^r r!)
  SeriesValue s = sum_terms(
      [&](int r) {
        if (r > 0) base *= q / r;
        return base * phi(2.0 * r) * sigma(-r - 0.5);
      },
      opts);
  const double scale = std::sqrt(std::numbers::pi) / std::fabs(b);
  s.value *= scale;
  s.error_estimate *= scale;
  return s;
}

/// Disentangled pseudo-exponential exp(c (X + Y)) phi(0) for X = k x, Y = d/dx
/// and phi(r) = 1/r!, reduced to the scalar series
///   sum_r (k x)^r W_r(-k/2 | 2) / r!.
inline SeriesValue weyl_pseudo_exp(double x, double k, const SeriesOptions& opts = {}) {
  const double kx = k * x;
  double base = 1.0;  // (k x)^r / r!
  return sum_terms(
      [&](int r) {
        if (r > 0) base *= kx / r;
        return base * bessel_wright(r, 2.0, -0.5 * k);
      },
      opts);
}

}  // namespace rmt
