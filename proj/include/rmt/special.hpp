#pragma once

// Scalar special-function kernels: gamma machinery, Bessel J, the
// Tricomi-Bessel function C_alpha, the Bessel-Wright function and the
// two-variable polynomial families (Hermite, higher-order Hermite,
// Laguerre, hybrid).

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "error.hpp"

namespace rmt {

namespace detail {

inline bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// sin(pi x) with exact zeros at the integers.
inline double sinpi(double x) {
  double y = x - 2.0 * std::round(0.5 * x);  // y in [-1, 1]
  if (y == 0.0 || y == 1.0 || y == -1.0) return 0.0;
  double ay = std::fabs(y);
  double s = ay > 0.5 ? std::sin(std::numbers::pi * (1.0 - ay))
                      : std::sin(std::numbers::pi * ay);
  return y < 0 ? -s : s;
}

}  // namespace detail

/// Euler gamma function. Throws PoleError at 0, -1, -2, ...
inline double gamma(double x) {
  if (detail::is_nonpositive_integer(x))
    throw PoleError("gamma: pole at x = " + std::to_string(x));
  return std::tgamma(x);
}

/// Reciprocal gamma 1/Gamma(x). Entire: exactly zero at the poles of gamma.
inline double rgamma(double x) {
  if (std::isnan(x)) return x;
  if (detail::is_nonpositive_integer(x)) return 0.0;
  if (x >= 0.5) return 1.0 / std::tgamma(x);
  // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi.
  return detail::sinpi(x) * std::tgamma(1.0 - x) / std::numbers::pi;
}

/// Rising factorial (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1.
inline double pochhammer(double x, int n) {
  if (n < 0) throw DomainError("pochhammer: n must be non-negative");
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= x + i;
  return p;
}

/// Bessel function of the first kind J_order(z), order >= 0.
///
/// Negative z is accepted for integer orders through the parity relation
/// J_n(-z) = (-1)^n J_n(z); non-integer orders need z >= 0.
inline double bessel_j(double order, double z) {
  if (!(order >= 0.0)) throw DomainError("bessel_j: order must be >= 0");
  if (z == 0.0) return order == 0.0 ? 1.0 : 0.0;
  if (z < 0.0) {
    if (order != std::floor(order))
      throw DomainError("bessel_j: negative argument needs an integer order");
    double v = std::cyl_bessel_j(order, -z);
    return std::fmod(order, 2.0) == 0.0 ? v : -v;
  }
  return std::cyl_bessel_j(order, z);
}

/// Tricomi-Bessel function C_alpha(x) = sum_r (-x)^r / (r! Gamma(r+alpha+1)).
///
/// The ascending series is used for x <= 25; beyond that (and alpha >= 0)
/// the Bessel form x^(-alpha/2) J_alpha(2 sqrt(x)) avoids cancellation.
inline double tricomi_c(double alpha, double x) {
  if (!(alpha > -1.0)) throw DomainError("tricomi_c: alpha must be > -1");
  if (x > 25.0 && alpha >= 0.0)
    return std::pow(x, -0.5 * alpha) * bessel_j(alpha, 2.0 * std::sqrt(x));

  double term = rgamma(alpha + 1.0);
  double sum = term;
  int small = 0;
  for (int r = 0; r < 10000; ++r) {
    term *= -x / ((r + 1.0) * (r + alpha + 1.0));
    sum += term;
    // the series is entire; terms shrink once r exceeds sqrt(|x|)
    if (std::fabs(term) <= std::numeric_limits<double>::epsilon() * std::fabs(sum) &&
        (r + 1.0) * (r + 1.0) > std::fabs(x)) {
      if (++small == 2) break;
    } else {
      small = 0;
    }
  }
  return sum;
}

/// Bessel-Wright function W_r(x | nu) = sum_n x^n / (n! Gamma(nu n + r + 1)).
inline double bessel_wright(double r, double nu, double x) {
  if (!(nu > 0.0)) throw DomainError("bessel_wright: nu must be > 0");
  if (!(r > -1.0)) throw DomainError("bessel_wright: r must be > -1");
  double pow_over_fact = 1.0;  // x^n / n!
  double sum = rgamma(r + 1.0);
  double prev = std::fabs(sum);
  int small = 0;
  for (int n = 1; n < 10000; ++n) {
    pow_over_fact *= x / n;
    double term = pow_over_fact * rgamma(nu * n + r + 1.0);
    sum += term;
    double mag = std::fabs(term);
    if (mag <= std::numeric_limits<double>::epsilon() * std::fabs(sum) && mag <= prev) {
      if (++small == 2) break;
    } else {
      small = 0;
    }
    prev = mag;
  }
  return sum;
}

/// Polynomial family selector for poly_eval.
struct PolyFamily {
  enum class Kind { Hermite2, HermiteM, Laguerre2, Hybrid };

  Kind kind = Kind::Hermite2;
  int m = 2;  // order of HermiteM

  static constexpr PolyFamily hermite() { return {Kind::Hermite2, 2}; }
  static constexpr PolyFamily hermite_m(int order) { return {Kind::HermiteM, order}; }
  static constexpr PolyFamily laguerre() { return {Kind::Laguerre2, 2}; }
  static constexpr PolyFamily hybrid() { return {Kind::Hybrid, 2}; }
};

/// Evaluates the degree-n member of a two-variable polynomial family.
///
///   Hermite2  : H_n(x,y)     = n! sum_{r<=n/2} x^(n-2r) y^r / ((n-2r)! r!)
///   HermiteM  : H_n^(m)(x,y) = n! sum_{r<=n/m} x^(n-mr) y^r / ((n-mr)! r!)
///   Laguerre2 : L_n(x,y)     = n! sum_{r<=n}   y^(n-r) (-x)^r / ((n-r)! (r!)^2)
///   Hybrid    : ~H_n(x,y)    = n! sum_{r<=n/2} x^(n-2r) y^r / ((n-2r)! (r!)^2)
///
/// The factorial ratio in front of each monomial is carried from term to
/// term, so no factorial is ever formed on its own.
inline double poly_eval(PolyFamily family, int n, double x, double y) {
  if (n < 0) throw DomainError("poly_eval: degree must be non-negative");
  switch (family.kind) {
    case PolyFamily::Kind::Hermite2:
      return poly_eval(PolyFamily::hermite_m(2), n, x, y);

    case PolyFamily::Kind::HermiteM: {
      const int m = family.m;
      if (m < 2) throw DomainError("poly_eval: HermiteM needs m >= 2");
      double coeff = 1.0;  // n! / ((n-mr)! r!)
      double sum = 0.0;
      for (int r = 0; m * r <= n; ++r) {
        sum += coeff * std::pow(x, n - m * r) * std::pow(y, r);
        for (int j = 0; j < m; ++j) coeff *= n - m * r - j;
        coeff /= r + 1.0;
      }
      return sum;
    }

    case PolyFamily::Kind::Laguerre2: {
      double coeff = 1.0;  // n! / ((n-r)! (r!)^2)
      double sum = 0.0;
      for (int r = 0; r <= n; ++r) {
        sum += coeff * std::pow(y, n - r) * std::pow(-x, r);
        coeff *= (n - r) / ((r + 1.0) * (r + 1.0));
      }
      return sum;
    }

    case PolyFamily::Kind::Hybrid: {
      double coeff = 1.0;  // n! / ((n-2r)! (r!)^2)
      double sum = 0.0;
      for (int r = 0; 2 * r <= n; ++r) {
        sum += coeff * std::pow(x, n - 2 * r) * std::pow(y, r);
        coeff *= (n - 2.0 * r) * (n - 2.0 * r - 1.0) / ((r + 1.0) * (r + 1.0));
      }
      return sum;
    }
  }
  throw DomainError("poly_eval: unknown polynomial family");
}

}  // namespace rmt
