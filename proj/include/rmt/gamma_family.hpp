#pragma once

// Generalized gamma functions
//   Gamma(nu; a, b)     = int_0^inf x^(nu-1) exp(-a x - b x^2) dx
//   Gamma(nu; a, b | m) = int_0^inf x^(nu-1) exp(-a x - b x^m) dx
//   Lambda(nu; a, b)    = int_0^inf x^(nu-1) exp(-a x) C_0(b x) dx
//   B(nu; a, b)         = int_0^inf x^(nu-1) exp(-a x) J_0(2 sqrt(b) x) dx
// together with the identity residuals (recurrence, heat-like equation,
// Laguerre-derivative equation) that tie them together.
//
// The umbral series for Gamma(nu; a, b) has terms ~ Gamma(nu+2r)/r! and is
// asymptotic rather than convergent for every b != 0; it is summed with
// optimal truncation and only trusted when its error estimate is small.

#include <cmath>
#include <limits>
#include <numbers>

#include "coefficient.hpp"
#include "error.hpp"
#include "finite_diff.hpp"
#include "quadrature.hpp"
#include "series.hpp"
#include "special.hpp"

namespace rmt {

struct GenGammaParams {
  double nu = 1.0;
  double a = 1.0;
  double b = 0.0;
  int m = 2;
};

namespace detail {

inline void require_integrable(const char* op, double nu, double a) {
  if (!(nu > 0.0)) throw DomainError(std::string(op) + ": nu must be > 0");
  if (!(a > 0.0)) throw DomainError(std::string(op) + ": a must be > 0");
}

inline double relative_gap(double lhs, double rhs) {
  const double scale = std::fmax(std::fabs(lhs), std::fabs(rhs));
  return scale == 0.0 ? 0.0 : std::fabs(lhs - rhs) / scale;
}

// Accepts a series value when its error estimate is below rel_tol.
inline bool series_good(const SeriesValue& s, double rel_tol) {
  return s.trusted() && s.error_estimate <= rel_tol * std::fabs(s.value);
}

inline double quad_or_throw(const QuadResult& q, const char* op) {
  if (!q.converged)
    throw ConvergenceError(std::string(op) + ": quadrature did not converge");
  return q.value;
}

// Expansion of exp(-a x) under the Gaussian weight:
//   (1/2) sum_n (-a)^n Gamma((nu+n)/2) b^(-(nu+n)/2) / n!,
// convergent for all a, but cancelling when a/sqrt(b) is large.
inline SeriesValue gamma_h_dual_series(double nu, double a, double b,
                                       const SeriesOptions& opts) {
  const double ab = a * a / b;
  // even and odd chains advance by t_{n+2} = t_n (a^2/b) ((nu+n)/2) / ((n+1)(n+2))
  double even = 0.5 * gamma(0.5 * nu) * std::pow(b, -0.5 * nu);
  double odd = -0.5 * a * gamma(0.5 * (nu + 1.0)) * std::pow(b, -0.5 * (nu + 1.0));
  return sum_terms(
      [&](int n) {
        if (n < 2) return n == 0 ? even : odd;
        const int p = n - 2;
        double& t = (n % 2 == 0) ? even : odd;
        t *= ab * 0.5 * (nu + p) / ((p + 1.0) * (p + 2.0));
        return t;
      },
      opts);
}

inline double gamma_h_quadrature(double nu, double a, double b, double tol) {
  auto f = [=](double x) { return std::exp((nu - 1.0) * std::log(x) - a * x - b * x * x); };
  return quad_or_throw(integrate_halfline_decay(f, tol), "gamma_h");
}

}  // namespace detail

/// Umbral series Gamma(nu) H_{-nu}(a, -b) = sum_r Gamma(nu+2r) (-b)^r a^(-nu-2r) / r!,
/// with Gamma(1-nu)/Gamma(1-nu-2r) rewritten as (nu)_{2r}.
inline SeriesValue hermite_neg_series(double nu, double a, double b,
                                      const SeriesOptions& opts = {}) {
  if (!(a > 0.0)) throw DomainError("hermite_neg_series: a must be > 0");
  double t = gamma(nu) * std::pow(a, -nu);
  const double q = -b / (a * a);
  return sum_terms(
      [&](int r) {
        if (r > 0) t *= q * (nu + 2.0 * r - 2.0) * (nu + 2.0 * r - 1.0) / r;
        return t;
      },
      opts);
}

/// Gamma(nu; a, b) to about 1e-12 relative.
///
/// b = 0 is Gamma(nu)/a^nu. For b/a^2 >= 0.05 the dual expansion in powers of
/// a is used; below that the optimally truncated umbral series is tried.
/// Either path falls back to quadrature when its error estimate is too large.
inline double gamma_h(double nu, double a, double b, const SeriesOptions& opts = {}) {
  detail::require_integrable("gamma_h", nu, a);
  if (!(b >= 0.0)) throw DomainError("gamma_h: b must be >= 0");
  if (b == 0.0) return gamma(nu) / std::pow(a, nu);

  constexpr double accept = 1e-12;
  if (b / (a * a) >= 0.05) {
    SeriesValue s = detail::gamma_h_dual_series(nu, a, b, opts);
    if (detail::series_good(s, accept)) return s.value;
  } else {
    SeriesValue s = hermite_neg_series(nu, a, b, opts);
    if (detail::series_good(s, accept)) return s.value;
  }
  return detail::gamma_h_quadrature(nu, a, b, 1e-13);
}

/// |(nu-1) G(nu-1) - a G(nu) - 2b G(nu+1)| / |(nu-1) G(nu-1)|, G = Gamma(.; a, b).
inline double gamma_h_recurrence_residual(double nu, double a, double b) {
  if (!(nu > 1.0)) throw DomainError("gamma_h_recurrence_residual: nu must be > 1");
  const double lhs = (nu - 1.0) * gamma_h(nu - 1.0, a, b);
  const double rhs = a * gamma_h(nu, a, b) + 2.0 * b * gamma_h(nu + 1.0, a, b);
  return std::fabs(lhs - rhs) / std::fabs(lhs);
}

/// Relative residual of d/db Gamma(nu; a, b) = -d^2/da^2 Gamma(nu; a, b),
/// both sides by Richardson-extrapolated central differences with first step h
/// (default 1e-3 a).
inline double gamma_h_heat_residual(double nu, double a, double b, double h = 0.0) {
  detail::require_integrable("gamma_h_heat_residual", nu, a);
  if (!(b > 0.0)) throw DomainError("gamma_h_heat_residual: b must be > 0");
  if (h <= 0.0) h = 1e-3 * a;
  const double hb = std::fmin(h, 0.5 * b);
  const double db =
      finite_diff_oracle([&](double bb) { return gamma_h(nu, a, bb); }, 1, b, hb, 4).value;
  const double daa =
      finite_diff_oracle([&](double aa) { return gamma_h(nu, aa, b); }, 2, a, h, 4).value;
  return detail::relative_gap(db, -daa);
}

/// Gamma(nu; a, b | m). m = 1 merges the exponents; otherwise quadrature.
inline double gamma_h_m(double nu, double a, double b, int m, double tol = 1e-12) {
  detail::require_integrable("gamma_h_m", nu, a);
  if (m < 1) throw DomainError("gamma_h_m: m must be >= 1");
  if (!(b >= 0.0)) throw DomainError("gamma_h_m: b must be >= 0");
  if (b == 0.0) return gamma(nu) / std::pow(a, nu);
  if (m == 1) return gamma(nu) / std::pow(a + b, nu);
  auto f = [=](double x) {
    const double lx = std::log(x);
    return std::exp((nu - 1.0) * lx - a * x - b * std::exp(m * lx));
  };
  return detail::quad_or_throw(integrate_halfline_decay(f, tol), "gamma_h_m");
}

/// Regularized umbral series for Gamma(nu; a, b c | m) phi(0):
///   sum_r Gamma(nu+mr) (-b)^r a^(-nu-mr) phi(r) / r!,
/// with Gamma(nu+mr) carried by the recurrence Gamma(nu+m(r+1)) = (nu+mr)_m Gamma(nu+mr).
inline SeriesValue umbral_regularized_series(double nu, double a, double b, int m,
                                             const CoefficientFn& phi,
                                             const SeriesOptions& opts = {}) {
  if (!(a > 0.0)) throw DomainError("umbral_regularized_series: a must be > 0");
  if (m < 1) throw DomainError("umbral_regularized_series: m must be >= 1");
  double base = gamma(nu) * std::pow(a, -nu);
  const double q = -b * std::pow(a, -m);
  return sum_terms(
      [&](int r) {
        if (r > 0) base *= q * pochhammer(nu + m * (r - 1.0), m) / r;
        return base * phi(r);
      },
      opts);
}

/// Lambda(nu; a, b) = Gamma(nu) a^(-nu) sum_r (nu)_r (-b/a)^r / (r!)^2.
/// Entire in b/a; quadrature takes over if cancellation spoils the sum.
inline double lambda_l(double nu, double a, double b, const SeriesOptions& opts = {}) {
  detail::require_integrable("lambda_l", nu, a);
  const double ratio = -b / a;
  double t = 1.0;
  SeriesValue s = sum_terms(
      [&](int r) {
        if (r > 0) t *= ratio * (nu + r - 1.0) / (static_cast<double>(r) * r);
        return t;
      },
      opts);
  const double pre = gamma(nu) * std::pow(a, -nu);
  if (detail::series_good(s, 1e-12)) return pre * s.value;
  auto f = [=](double x) { return std::pow(x, nu - 1.0) * std::exp(-a * x) * tricomi_c(0.0, b * x); };
  QuadResult q = integrate_halfline_decay(f, 1e-12);
  // near a zero of Lambda neither route meets a relative target; keep the better one
  if (q.converged || q.error_estimate < std::fabs(pre) * s.error_estimate) {
    if (!q.converged && q.error_estimate > 1e-8 * std::fmax(std::fabs(q.value), 1.0))
      throw ConvergenceError("lambda_l: neither series nor quadrature converged");
    return q.value;
  }
  return pre * s.value;
}

/// Relative residual of d/da Lambda = d/db (b d/db Lambda), by finite differences.
inline double laguerre_deriv_residual(double nu, double a, double b, double h = 0.0) {
  detail::require_integrable("laguerre_deriv_residual", nu, a);
  if (!(b > 0.0)) throw DomainError("laguerre_deriv_residual: b must be > 0");
  if (h <= 0.0) h = 1e-3 * a;
  const double hb = std::fmin(h, 0.25 * b);
  const double da =
      finite_diff_oracle([&](double aa) { return lambda_l(nu, aa, b); }, 1, a, h, 4).value;
  const double db =
      finite_diff_oracle([&](double bb) { return lambda_l(nu, a, bb); }, 1, b, hb, 4).value;
  const double dbb =
      finite_diff_oracle([&](double bb) { return lambda_l(nu, a, bb); }, 2, b, hb, 4).value;
  return detail::relative_gap(da, db + b * dbb);
}

/// Series for B(nu; a, b), valid inside 4b < a^2:
///   sum_r Gamma(nu+2r) (-b)^r a^(-nu-2r) / (r!)^2.
inline SeriesValue bessel_b_series(double nu, double a, double b, const SeriesOptions& opts = {}) {
  return umbral_regularized_series(nu, a, b, 2, inverse_factorial(), opts);
}

/// int_0^inf x^(nu-1) exp(-a x) J_0(2 sqrt(b) x) dx by quadrature.
inline QuadResult bessel_b_quadrature(double nu, double a, double b, double tol = 1e-12) {
  const double k = 2.0 * std::sqrt(b);
  auto f = [=](double x) { return std::pow(x, nu - 1.0) * std::exp(-a * x) * bessel_j(0.0, k * x); };
  QuadResult q = integrate_halfline_decay(f, tol);
  if (q.converged || k == 0.0) return q;
  return integrate_halfline_oscillatory(f, std::numbers::pi / k, tol);
}

/// B(nu; a, b). The series is used for 4b < 0.8 a^2, quadrature otherwise.
inline double bessel_b(double nu, double a, double b, const SeriesOptions& opts = {}) {
  detail::require_integrable("bessel_b", nu, a);
  if (!(b >= 0.0)) throw DomainError("bessel_b: b must be >= 0");
  if (b == 0.0) return gamma(nu) / std::pow(a, nu);
  if (4.0 * b < 0.8 * a * a) {
    SeriesValue s = bessel_b_series(nu, a, b, opts);
    if (detail::series_good(s, 1e-12)) return s.value;
  }
  return detail::quad_or_throw(bessel_b_quadrature(nu, a, b), "bessel_b");
}

}  // namespace rmt
