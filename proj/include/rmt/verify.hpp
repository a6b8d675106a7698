#pragma once

// Identity verification suite. Every case compares a closed form (or an
// identity residual) against an independent route: quadrature, finite
// differences, a second series, or a known elementary value. A case passes
// iff its residual is at most its declared tolerance.

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coefficient.hpp"
#include "derivatives.hpp"
#include "error.hpp"
#include "expr.hpp"
#include "finite_diff.hpp"
#include "gamma_family.hpp"
#include "quadrature.hpp"
#include "series.hpp"
#include "special.hpp"
#include "umbral.hpp"

namespace rmt {

struct VerifyCase {
  std::string id;
  int criterion = 0;
  std::vector<std::pair<std::string, double>> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string status = "ok";  // ok | pole | domain | nonconvergence | error
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCase> cases;
  int passed = 0;
  int failed = 0;
};

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"all", "mellin", "umbral", "gamma", "deriv", "special"};
  return names;
}

namespace detail {

using Params = std::vector<std::pair<std::string, double>>;

struct Comparison {
  double lhs;
  double rhs;
  double residual;
};

inline Comparison rel(double lhs, double rhs) {
  const double scale = std::fabs(rhs);
  return {lhs, rhs, scale == 0.0 ? std::fabs(lhs) : std::fabs(lhs - rhs) / scale};
}

inline Comparison rel_floor1(double lhs, double rhs) {
  return {lhs, rhs, std::fabs(lhs - rhs) / std::fmax(1.0, std::fabs(rhs))};
}

inline Comparison absolute(double lhs, double rhs) { return {lhs, rhs, std::fabs(lhs - rhs)}; }

// residual passes against tolerance 0 iff value >= threshold
inline Comparison at_least(double value, double threshold) {
  return {value, threshold, threshold - value};
}

class SuiteBuilder {
 public:
  void add(int criterion, std::string id, Params params, double tolerance,
           const std::function<Comparison()>& check) {
    VerifyCase c;
    c.id = std::move(id);
    c.criterion = criterion;
    c.params = std::move(params);
    c.tolerance = tolerance;
    try {
      const Comparison r = check();
      c.lhs = r.lhs;
      c.rhs = r.rhs;
      c.residual = r.residual;
      c.pass = std::isfinite(r.residual) && r.residual <= tolerance;
    } catch (const PoleError&) {
      c.status = "pole";
    } catch (const DomainError&) {
      c.status = "domain";
    } catch (const ConvergenceError&) {
      c.status = "nonconvergence";
    } catch (const std::exception&) {
      c.status = "error";
    }
    if (c.status != "ok") {
      c.pass = false;
      c.residual = std::numeric_limits<double>::quiet_NaN();
    }
    cases_.push_back(std::move(c));
  }

  std::vector<VerifyCase> take() { return std::move(cases_); }

 private:
  std::vector<VerifyCase> cases_;
};

// int_0^inf x^(nu-1) f(x) dx for f(x) = C_alpha(x), after u = 2 sqrt(x) so that
// the panels follow the zeros of J_alpha(u).
inline QuadResult mellin_of_tricomi(double alpha, double nu, double tol = 1e-9) {
  auto integrand = [=](double u) {
    const double x = 0.25 * u * u;
    return std::pow(x, nu - 1.0) * tricomi_c(alpha, x) * 0.5 * u;
  };
  return integrate_halfline_oscillatory(integrand, std::numbers::pi, tol);
}

inline double quad_value(const QuadResult& q, const char* what) {
  if (!q.converged) throw ConvergenceError(std::string(what) + ": quadrature did not converge");
  return q.value;
}

// Independent double-sum evaluation of the disentangled pseudo-exponential:
//   sum_r sum_s (k x)^r (-k/2)^s / (r! s! Gamma(2s + r + 1)).
inline double weyl_double_sum(double x, double k) {
  double total = 0.0;
  for (int r = 0; r < 80; ++r) {
    if (r > 0 && k * x == 0.0) break;
    for (int s = 0; s < 80; ++s) {
      if (s > 0 && k == 0.0) break;
      const double log_mag = (r == 0 ? 0.0 : r * std::log(std::fabs(k * x))) +
                             (s == 0 ? 0.0 : s * std::log(0.5 * std::fabs(k))) -
                             std::lgamma(r + 1.0) - std::lgamma(s + 1.0) -
                             std::lgamma(2.0 * s + r + 1.0);
      const bool neg_r = r % 2 == 1 && k * x < 0.0;
      const bool neg_s = s % 2 == 1 && k > 0.0;
      total += (neg_r != neg_s ? -1.0 : 1.0) * std::exp(log_mag);
    }
  }
  return total;
}

inline void mellin_cases(SuiteBuilder& sb) {
  for (double alpha : {1.0, 2.0})
    for (double nu : {0.25, 0.5, 0.75, 1.0})
      sb.add(1, "tricomi_rmt", {{"alpha", alpha}, {"nu", nu}}, 1e-6, [=] {
        return rel(quad_value(mellin_of_tricomi(alpha, nu), "tricomi_rmt"),
                   gamma(nu) / gamma(alpha - nu + 1.0));
      });
  sb.add(1, "tricomi_rmt", {{"alpha", 0.0}, {"nu", 0.5}}, 1e-6,
         [] { return rel(quad_value(mellin_of_tricomi(0.0, 0.5), "tricomi_rmt"), 1.0); });

  // Commutation of integral and umbral evaluation for phi(r) = 1/Gamma(r+beta+1),
  // with phi built from the expression language.
  for (double beta : {0.0, 0.5, 1.0, 2.0}) {
    const CoefficientFn phi = parse_phi("1/gamma(r+beta+1)", {{"beta", beta}});
    for (double nu : {0.25, 0.5, 0.75, 1.0, 1.25, 1.5}) {
      // absolute convergence at infinity needs nu < beta/2 + 3/4; keep a margin
      if (nu > 0.5 * beta + 0.5) continue;
      sb.add(12, "conjecture", {{"beta", beta}, {"nu", nu}}, 1e-6, [=] {
        return rel(quad_value(mellin_of_tricomi(beta, nu), "conjecture"), rmt_mellin(phi, nu));
      });
    }
  }
}

inline void umbral_cases(SuiteBuilder& sb) {
  const CoefficientFn inv_fact = inverse_factorial();
  for (double b : {0.0, 0.5, 1.0, 1.9})
    sb.add(2, "pseudo_gauss_closed_form", {{"b", b}}, 1e-10, [=] {
      SeriesValue s = pseudo_gauss(inv_fact, b);
      if (!s.trusted()) throw ConvergenceError("pseudo_gauss diverged");
      return rel(s.value, 2.0 / std::sqrt(4.0 + b * b));
    });

  for (auto [a, b] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {0.5, 1.0}})
    sb.add(8, "product_integral_bessel", {{"a", a}, {"b", b}}, 1e-10, [=] {
      SeriesValue s = product_integral(inv_fact, inv_fact, a, b);
      if (!s.trusted()) throw ConvergenceError("product_integral diverged");
      return rel(s.value, bessel_j(0.0, a / (2.0 * b)) / b);
    });
  const CoefficientFn shifted = inverse_gamma_shift(0.5);
  for (double b : {1.0, 2.0, -0.5})
    sb.add(8, "product_integral_a0", {{"b", b}}, 1e-12, [=] {
      SeriesValue s = product_integral(shifted, inv_fact, 0.0, b);
      return rel(s.value, std::sqrt(std::numbers::pi) / std::fabs(b) * shifted(0.0) * inv_fact(-0.5));
    });
}

inline void special_cases(SuiteBuilder& sb) {
  for (auto [a, b, x] : {std::tuple{1.0, 0.5, 0.5}, {0.0, 1.0, 0.5}})
    sb.add(10, "hybrid_genfunc", {{"a", a}, {"b", b}, {"x", x}, {"N", 40}}, 1e-8,
           [=] { return Comparison{hybrid_genfunc_residual(a, b, x, 40), 0.0,
                                   hybrid_genfunc_residual(a, b, x, 40)}; });

  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int i = 0; i < 3; ++i) {
    const double a = dist(rng);
    const double b = dist(rng);
    sb.add(10, "hybrid_h4", {{"a", a}, {"b", b}}, 1e-12, [=] {
      return rel(poly_eval(PolyFamily::hybrid(), 4, a, b),
                 a * a * a * a + 12.0 * a * a * b + 6.0 * b * b);
    });
  }

  for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0})
    for (double k : {-2.0, -1.0, 0.0, 1.0, 2.0})
      sb.add(11, "weyl_single_vs_double", {{"x", x}, {"k", k}}, 1e-12, [=] {
        SeriesValue s = weyl_pseudo_exp(x, k);
        if (!s.trusted()) throw ConvergenceError("weyl_pseudo_exp diverged");
        return rel_floor1(s.value, weyl_double_sum(x, k));
      });

  for (double alpha : {0.0, 0.5, 1.0, 2.0})
    for (double x : {0.5, 1.0, 2.0, 5.0, 10.0})
      sb.add(11, "bessel_wright_tricomi", {{"alpha", alpha}, {"x", x}}, 1e-10,
             [=] { return rel(bessel_wright(alpha, 1.0, -x), tricomi_c(alpha, x)); });
}

inline void gamma_cases(SuiteBuilder& sb) {
  for (double nu : {0.5, 1.5, 2.5})
    for (double a : {0.5, 1.0, 2.0})
      for (double b : {0.5, 1.0})
        sb.add(3, "gamma_h_vs_quadrature", {{"nu", nu}, {"a", a}, {"b", b}}, 1e-10, [=] {
          auto f = [=](double x) { return std::exp((nu - 1.0) * std::log(x) - a * x - b * x * x); };
          return rel(gamma_h(nu, a, b), quad_value(integrate_halfline_decay(f, 1e-12), "gamma_h"));
        });
  for (double nu : {0.5, 1.5, 2.5, 3.7})
    sb.add(3, "gamma_h_euler", {{"nu", nu}}, 1e-12,
           [=] { return rel(gamma_h(nu, 1.0, 0.0), gamma(nu)); });
  for (double nu : {1.5, 2.0})
    for (double a : {1.0, 2.0})
      for (double b : {0.5, 1.0}) {
        Params p{{"nu", nu}, {"a", a}, {"b", b}};
        sb.add(3, "gamma_h_heat", p, 1e-6, [=] {
          const double r = gamma_h_heat_residual(nu, a, b);
          return Comparison{r, 0.0, r};
        });
        sb.add(3, "gamma_h_ladder_a", p, 1e-6, [=] {
          auto d = finite_diff_oracle([&](double aa) { return gamma_h(nu, aa, b); }, 1, a, 1e-2 * a);
          return rel(d.value, -gamma_h(nu + 1.0, a, b));
        });
        sb.add(3, "gamma_h_ladder_b", p, 1e-6, [=] {
          auto d = finite_diff_oracle([&](double bb) { return gamma_h(nu, a, bb); }, 1, b, 1e-2 * b);
          return rel(d.value, -gamma_h(nu + 2.0, a, b));
        });
      }

  for (double nu : {1.5, 2.0, 2.5})
    for (double a : {1.0, 2.0})
      for (double b : {0.0, 0.5, 1.0}) {
        const double tol = (a == 1.0 && b == 0.0) ? 1e-12 : 1e-8;
        sb.add(4, "gamma_h_recurrence", {{"nu", nu}, {"a", a}, {"b", b}}, tol, [=] {
          const double r = gamma_h_recurrence_residual(nu, a, b);
          return Comparison{r, 0.0, r};
        });
      }

  sb.add(5, "hermite_neg_asymptotic_class", {{"nu", 0.5}, {"a", 3.0}, {"b", 0.1}}, 0.0, [] {
    SeriesValue s = hermite_neg_series(0.5, 3.0, 0.1);
    const double is_asym = s.classification == Convergence::AsymptoticOptimalTruncation ? 1.0 : 0.0;
    return Comparison{is_asym, 1.0, 1.0 - is_asym};
  });
  sb.add(5, "hermite_neg_within_estimate", {{"nu", 0.5}, {"a", 3.0}, {"b", 0.1}}, 0.0, [] {
    SeriesValue s = hermite_neg_series(0.5, 3.0, 0.1);
    const double gap = std::fabs(s.value - gamma_h(0.5, 3.0, 0.1));
    return Comparison{gap, s.error_estimate, gap - s.error_estimate};
  });
  sb.add(5, "hermite_neg_honest_error", {{"nu", 0.5}, {"a", 1.0}, {"b", 1.0}}, 0.0,
         [] { return at_least(hermite_neg_series(0.5, 1.0, 1.0).error_estimate, 1e-3); });

  for (double nu : {0.5, 1.5, 2.5})
    for (double a : {1.0, 2.0})
      sb.add(6, "lambda_b0", {{"nu", nu}, {"a", a}}, 1e-12,
             [=] { return rel(lambda_l(nu, a, 0.0), gamma(nu) / std::pow(a, nu)); });
  for (double a : {1.0, 2.0})
    for (double b : {0.5, 2.0})
      sb.add(6, "lambda_nu1", {{"a", a}, {"b", b}}, 1e-10,
             [=] { return rel(lambda_l(1.0, a, b), std::exp(-b / a) / a); });
  for (double nu : {1.5, 2.0})
    for (double a : {1.0, 2.0})
      for (double b : {0.5, 1.0})
        sb.add(6, "laguerre_derivative", {{"nu", nu}, {"a", a}, {"b", b}}, 1e-6, [=] {
          const double r = laguerre_deriv_residual(nu, a, b);
          return Comparison{r, 0.0, r};
        });
  sb.add(6, "lambda_vs_quadrature", {{"nu", 1.5}, {"a", 1.0}, {"b", 2.0}}, 1e-8, [] {
    const double nu = 1.5, a = 1.0, b = 2.0;
    auto f = [=](double x) { return std::pow(x, nu - 1.0) * std::exp(-a * x) * tricomi_c(0.0, b * x); };
    return rel(lambda_l(nu, a, b), quad_value(integrate_halfline_decay(f, 1e-12), "lambda"));
  });

  for (double a : {1.0, 2.0})
    for (double b : {0.1, 0.5})
      sb.add(7, "bessel_b_nu1", {{"a", a}, {"b", b}}, 1e-10,
             [=] { return rel(bessel_b(1.0, a, b), 1.0 / std::sqrt(a * a + 4.0 * b)); });
  for (double nu : {0.5, 1.0, 1.5, 2.5})
    for (double a : {1.0, 2.0})
      for (double b : {0.05, 0.1, 0.19, 0.5, 0.75}) {
        if (!(4.0 * b < 0.8 * a * a)) continue;
        sb.add(7, "bessel_b_series_vs_quadrature", {{"nu", nu}, {"a", a}, {"b", b}}, 1e-9, [=] {
          SeriesValue s = bessel_b_series(nu, a, b);
          if (!s.trusted()) throw ConvergenceError("bessel_b series diverged");
          return rel(s.value, quad_value(bessel_b_quadrature(nu, a, b), "bessel_b"));
        });
      }
}

inline void deriv_cases(SuiteBuilder& sb) {
  auto fd = [](auto&& f, int n, double x) {
    DerivativeEstimate d = finite_diff_oracle(f, n, x);
    if (!d.converged) throw ConvergenceError("finite difference did not converge");
    return d.value;
  };
  for (int n = 0; n <= 6; ++n)
    for (double x : {0.3, 0.7, 1.1}) {
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      for (double a : {0.5, 1.0})
        sb.add(9, "hermite_gauss_deriv", {{"n", n}, {"x", x}, {"a", a}}, 1e-6, [=] {
          return rel(sign * fd([=](double t) { return std::exp(-a * t * t); }, n, x),
                     hermite_gauss_deriv(n, a, x));
        });
      sb.add(9, "d_n_j0", {{"n", n}, {"x", x}}, 1e-6, [=] {
        return rel(sign * fd([](double t) { return bessel_j(0.0, 2.0 * t); }, n, x), d_n_j0(n, x));
      });
      for (double a : {0.5, 1.0})
        for (double b : {0.25, 1.0}) {
          Params p{{"n", n}, {"x", x}, {"a", a}, {"b", b}};
          sb.add(9, "d_n_exp_j0", p, 1e-6, [=] {
            auto f = [=](double t) { return std::exp(a * t) * bessel_j(0.0, 2.0 * std::sqrt(b) * t); };
            return rel(fd(f, n, x), d_n_exp_j0(n, a, b, x));
          });
          sb.add(9, "d_n_j0_j0", p, 1e-6, [=] {
            auto f = [=](double t) {
              return bessel_j(0.0, 2.0 * std::sqrt(a) * t) * bessel_j(0.0, 2.0 * std::sqrt(b) * t);
            };
            return rel(fd(f, n, x), d_n_j0_j0(n, a, b, x));
          });
        }
      sb.add(9, "d_n_j0_j0_symmetry", {{"n", n}, {"x", x}, {"a", 1.0}, {"b", 0.25}}, 1e-12,
             [=] { return rel(d_n_j0_j0(n, 1.0, 0.25, x), d_n_j0_j0(n, 0.25, 1.0, x)); });
    }
  for (double x : {0.3, 0.7, 1.1})
    sb.add(9, "d_1_j0_bessel", {{"x", x}}, 1e-10,
           [=] { return rel(d_n_j0(1, x), 2.0 * bessel_j(1.0, 2.0 * x)); });
}

}  // namespace detail

/// Runs a named suite: all, mellin, umbral, gamma, deriv, special.
inline VerifyReport run_verify_suite(std::string_view suite) {
  detail::SuiteBuilder sb;
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "mellin") detail::mellin_cases(sb), known = true;
  if (all || suite == "umbral") detail::umbral_cases(sb), known = true;
  if (all || suite == "gamma") detail::gamma_cases(sb), known = true;
  if (all || suite == "deriv") detail::deriv_cases(sb), known = true;
  if (all || suite == "special") detail::special_cases(sb), known = true;
  if (!known) throw DomainError("unknown verify suite '" + std::string(suite) + "'");

  VerifyReport report;
  report.suite = std::string(suite);
  report.cases = sb.take();
  for (const auto& c : report.cases) (c.pass ? report.passed : report.failed)++;
  return report;
}

}  // namespace rmt
