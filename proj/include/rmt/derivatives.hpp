#pragma once

// Closed-form repeated derivatives of Gaussian and Bessel-type functions,
// obtained by differentiating the pseudo-Gaussian exp(-c x^2) phi(0) with
// phi(r) = 1/r! (which is J_0(2x)) as if it were an ordinary Gaussian.

#include <cmath>

#include "error.hpp"
#include "special.hpp"

namespace rmt {

struct DerivRequest {
  int n = 0;
  double x = 1.0;
  double a = 0.0;
  double b = 0.0;
};

namespace detail {

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline void require_order(const char* op, int n) {
  if (n < 0) throw DomainError(std::string(op) + ": n must be >= 0");
}

}  // namespace detail

/// (-1)^n d^n/dx^n exp(-a x^2) = H_n(2 a x, -a) exp(-a x^2).
inline double hermite_gauss_deriv(int n, double a, double x) {
  detail::require_order("hermite_gauss_deriv", n);
  if (!(a > 0.0)) throw DomainError("hermite_gauss_deriv: a must be > 0");
  return poly_eval(PolyFamily::hermite(), n, 2.0 * a * x, -a) * std::exp(-a * x * x);
}

/// (-1)^n d^n/dx^n J_0(2x)
///   = n! sum_{r<=n/2} (-1)^r 2^(n-2r) J_{n-r}(2x) / (x^r (n-2r)! r!).
inline double d_n_j0(int n, double x) {
  detail::require_order("d_n_j0", n);
  if (!(x > 0.0)) throw DomainError("d_n_j0: x must be > 0");
  const double nf = detail::factorial(n);
  double sum = 0.0;
  for (int r = 0; 2 * r <= n; ++r) {
    const double c = (r % 2 == 0 ? 1.0 : -1.0) * std::ldexp(1.0, n - 2 * r) /
                     (std::pow(x, r) * detail::factorial(n - 2 * r) * detail::factorial(r));
    sum += c * bessel_j(n - r, 2.0 * x);
  }
  return nf * sum;
}

/// d^n/dx^n [exp(a x) J_0(2 sqrt(b) x)]
///   = exp(a x) sum_{r<=n/2} (-1)^(n-r) n! / (r! x^r)
///       sum_{s<=n-2r} (-a)^s b^((n-r-s)/2) 2^(n-2r-s) J_{n-r-s}(2 sqrt(b) x) / (s! (n-2r-s)!).
inline double d_n_exp_j0(int n, double a, double b, double x) {
  detail::require_order("d_n_exp_j0", n);
  if (!(b > 0.0)) throw DomainError("d_n_exp_j0: b must be > 0");
  if (!(x > 0.0)) throw DomainError("d_n_exp_j0: x must be > 0");
  const double sb = std::sqrt(b);
  const double z = 2.0 * sb * x;
  const double nf = detail::factorial(n);
  double total = 0.0;
  for (int r = 0; 2 * r <= n; ++r) {
    double inner = 0.0;
    for (int s = 0; s <= n - 2 * r; ++s) {
      const int order = n - r - s;
      inner += std::pow(-a, s) * std::pow(sb, order) * std::ldexp(1.0, n - 2 * r - s) *
               bessel_j(order, z) / (detail::factorial(s) * detail::factorial(n - 2 * r - s));
    }
    const double sign = (n - r) % 2 == 0 ? 1.0 : -1.0;
    total += sign * nf / (detail::factorial(r) * std::pow(x, r)) * inner;
  }
  return std::exp(a * x) * total;
}

/// d^n/dx^n [J_0(2 sqrt(a) x) J_0(2 sqrt(b) x)]
///   = sum_{r<=n/2} (-1)^(n-r) 2^(n-2r) n! / ((n-2r)! r!) x^(-r)
///       sum_{s<=n-r} C(n-r, s) b^(s/2) a^((n-r-s)/2) J_{n-r-s}(2 sqrt(a) x) J_s(2 sqrt(b) x).
inline double d_n_j0_j0(int n, double a, double b, double x) {
  detail::require_order("d_n_j0_j0", n);
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("d_n_j0_j0: a and b must be > 0");
  if (!(x > 0.0)) throw DomainError("d_n_j0_j0: x must be > 0");
  const double sa = std::sqrt(a);
  const double sb = std::sqrt(b);
  const double za = 2.0 * sa * x;
  const double zb = 2.0 * sb * x;
  const double nf = detail::factorial(n);
  double total = 0.0;
  for (int r = 0; 2 * r <= n; ++r) {
    const int top = n - r;
    double inner = 0.0;
    double binom = 1.0;
    for (int s = 0; s <= top; ++s) {
      inner += binom * std::pow(sb, s) * std::pow(sa, top - s) * bessel_j(top - s, za) *
               bessel_j(s, zb);
      binom = binom * (top - s) / (s + 1.0);
    }
    const double sign = (n - r) % 2 == 0 ? 1.0 : -1.0;
    total += sign * std::ldexp(1.0, n - 2 * r) * nf /
             (detail::factorial(n - 2 * r) * detail::factorial(r) * std::pow(x, r)) * inner;
  }
  return total;
}

/// |sum_{n<=N} x^n ~H_n(a,b)/n! - exp(a x) sum_r (b x^2)^r/(r!)^2|.
///
/// The right-hand factor is the pseudo-exponential exp(b c x^2) phi(0) with
/// phi(r) = 1/r!, i.e. C_0(-b x^2).
inline double hybrid_genfunc_residual(double a, double b, double x, int terms) {
  if (terms < 0) throw DomainError("hybrid_genfunc_residual: N must be >= 0");
  double lhs = 0.0;
  double pow_over_fact = 1.0;  // x^n / n!
  for (int n = 0; n <= terms; ++n) {
    if (n > 0) pow_over_fact *= x / n;
    lhs += pow_over_fact * poly_eval(PolyFamily::hybrid(), n, a, b);
  }
  const double rhs = std::exp(a * x) * tricomi_c(0.0, -b * x * x);
  return std::fabs(lhs - rhs);
}

}  // namespace rmt
