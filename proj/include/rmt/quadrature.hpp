#pragma once

// Numerical integration oracles used to validate closed forms.
//
// All three infinite-range rules are trapezoidal sums after a double
// exponential change of variables, refined by halving the step until two
// successive levels agree:
//   (0, inf)   x = exp(pi/2 sinh t)
//   (-inf,inf) x = sinh(pi/2 sinh t)
//   (a, b)     x = (a+b)/2 + (b-a)/2 tanh(pi/2 sinh t)
// Integrable endpoint singularities of type x^(nu-1), nu >= 0.1, are absorbed
// by the transformations.
//
// The oscillatory rule partitions (0, inf) at the sign changes of the
// integrand, integrates each panel, and accelerates the partial sums by
// iterated averaging.

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "error.hpp"

namespace rmt {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  bool converged = false;
};

namespace detail {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Relative acceptance, with an absolute floor of tol * min(1, int |f|) so that
// integrals close to zero can still converge.
inline bool quad_accepts(double err, double value, double magnitude, double tol) {
  return err <= tol * std::fmax(std::fabs(value), std::fmin(1.0, magnitude));
}

// Trapezoidal refinement of int_{-tmax}^{tmax} g(t) dt, where g returns the
// transformed integrand. Non-finite samples are dropped in the tails
// (|t| > 3), where they only come from over/underflow of the weight.
template <class G>
QuadResult de_trapezoid(G&& g, double tmax, double tol, int max_level) {
  int evals = 0;
  bool bad = false;
  auto sample = [&](double t) {
    ++evals;
    double v = g(t);
    if (!std::isfinite(v)) {
      if (std::fabs(t) <= 3.0) bad = true;
      return 0.0;
    }
    return v;
  };

  double abs_sum = 0.0;
  auto pair = [&](double t) {
    const double p = sample(t);
    const double q = sample(-t);
    abs_sum += std::fabs(p) + std::fabs(q);
    return p + q;
  };

  double h = 0.5;
  double sum = sample(0.0);
  abs_sum = std::fabs(sum);
  for (double t = h; t <= tmax; t += h) sum += pair(t);
  double estimate = h * sum;

  QuadResult res{estimate, std::numeric_limits<double>::infinity(), evals, false};
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double odd = 0.0;
    for (double t = h; t <= tmax; t += 2.0 * h) odd += pair(t);
    const double next = 0.5 * estimate + h * odd;
    const double err = std::fabs(next - estimate);
    estimate = next;
    res = {estimate, err, evals, false};
    if (bad) break;
    if (level >= 3 && quad_accepts(err, estimate, h * abs_sum, tol)) {
      res.converged = true;
      break;
    }
  }
  if (bad) res.converged = false;
  return res;
}

}  // namespace detail

/// int_0^inf f(x) dx for f with eventual exponential decay.
template <class F>
QuadResult integrate_halfline_decay(F&& f, double tol = 1e-10, int max_level = 10) {
  auto g = [&](double t) {
    const double u = detail::kHalfPi * std::sinh(t);
    const double x = std::exp(u);
    if (x == 0.0 || !std::isfinite(x)) return 0.0;
    return f(x) * x * detail::kHalfPi * std::cosh(t);
  };
  return detail::de_trapezoid(g, 6.5, tol, max_level);
}

/// int_{-inf}^{inf} f(x) dx for absolutely integrable f.
template <class F>
QuadResult integrate_realline(F&& f, double tol = 1e-10, int max_level = 10) {
  auto g = [&](double t) {
    const double u = detail::kHalfPi * std::sinh(t);
    const double x = std::sinh(u);
    if (!std::isfinite(x)) return 0.0;
    return f(x) * std::cosh(u) * detail::kHalfPi * std::cosh(t);
  };
  return detail::de_trapezoid(g, 6.5, tol, max_level);
}

/// int_a^b f(x) dx, tolerant of integrable singularities at either end.
/// f is never evaluated at the endpoints themselves.
template <class F>
QuadResult integrate_interval(F&& f, double a, double b, double tol = 1e-12,
                              int max_level = 10) {
  if (a == b) return {0.0, 0.0, 0, true};
  const double half = 0.5 * (b - a);
  auto g = [&](double t) {
    const double u = detail::kHalfPi * std::sinh(t);
    // distance from the nearer endpoint, computed without cancellation
    const double e = std::exp(-2.0 * std::fabs(u));
    const double dist = 2.0 * half * e / (1.0 + e);
    if (dist == 0.0) return 0.0;
    const double x = u < 0 ? a + dist : b - dist;
    if (x <= std::fmin(a, b) || x >= std::fmax(a, b)) return 0.0;
    // d/dt tanh(u) = sech^2(u) du/dt, with sech^2 u = 4e/(1+e)^2
    const double w = half * 4.0 * e / ((1.0 + e) * (1.0 + e)) * detail::kHalfPi * std::cosh(t);
    return f(x) * w;
  };
  return detail::de_trapezoid(g, 6.0, tol, max_level);
}

struct OscillatoryOptions {
  int min_panels = 24;
  int max_panels = 384;
  int averaging_depth = 16;
  double max_range_periods = 4000.0;  // give up scanning for zeros beyond this
};

/// int_0^inf f(x) dx for f eventually oscillatory with an algebraically
/// decaying envelope (conditionally convergent integrals included).
///
/// period_hint is the expected distance between consecutive sign changes; the
/// integrand is scanned at a quarter of it so that every sign change is
/// bracketed. Panels run between consecutive zeros, so the panel integrals
/// alternate and iterated averaging of the partial sums converges rapidly.
template <class F>
QuadResult integrate_halfline_oscillatory(F&& f, double period_hint, double tol = 1e-7,
                                          const OscillatoryOptions& opts = {}) {
  if (!(period_hint > 0.0))
    throw DomainError("integrate_halfline_oscillatory: period_hint must be > 0");

  int evals = 0;
  auto fe = [&](double x) {
    ++evals;
    return f(x);
  };

  const double step = 0.25 * period_hint;
  const double x_limit = opts.max_range_periods * period_hint;
  const double panel_tol = std::fmin(1e-13, 1e-3 * tol);

  std::vector<double> partial;  // integral from 0 to the i-th zero
  double left = 0.0;
  double running = 0.0;
  double magnitude = 0.0;  // sum of |panel integrals|
  double x_prev = step;
  double f_prev = fe(x_prev);
  bool panels_ok = true;

  auto bisect = [&](double lo, double hi, double flo) {
    for (int i = 0; i < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++i) {
      const double mid = 0.5 * (lo + hi);
      const double fm = fe(mid);
      if (fm == 0.0) return mid;
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  auto add_panel = [&](double zero) {
    QuadResult p = integrate_interval(fe, left, zero, panel_tol);
    if (!p.converged && p.error_estimate > 1e-3 * tol * std::fmax(1.0, std::fabs(running)))
      panels_ok = false;
    running += p.value;
    magnitude += std::fabs(p.value);
    partial.push_back(running);
    left = zero;
  };

  // iterated averaging on the last depth+1 partial sums ending at `end`
  auto averaged = [&](std::size_t end, int depth) {
    std::vector<double> row(partial.begin() + static_cast<std::ptrdiff_t>(end - depth),
                            partial.begin() + static_cast<std::ptrdiff_t>(end + 1));
    for (int level = 0; level < depth; ++level)
      for (std::size_t i = 0; i + 1 < row.size() - level; ++i)
        row[i] = 0.5 * (row[i] + row[i + 1]);
    return row[0];
  };

  QuadResult res{0.0, std::numeric_limits<double>::infinity(), 0, false};
  int target = opts.min_panels;
  double x = x_prev;
  while (x < x_limit) {
    x += step;
    const double fx = fe(x);
    if (fx == 0.0 || (fx < 0) != (f_prev < 0)) {
      const double zero = fx == 0.0 ? x : bisect(x_prev, x, f_prev);
      if (zero > left) add_panel(zero);
    }
    x_prev = x;
    f_prev = fx;

    if (static_cast<int>(partial.size()) == target + 1) {
      const int depth = std::min(opts.averaging_depth, target / 2);
      const std::size_t end = partial.size() - 1;
      const double a1 = averaged(end, depth);
      const double a0 = averaged(end - 1, depth);
      res = {a1, std::fabs(a1 - a0), evals, false};
      if (panels_ok && detail::quad_accepts(res.error_estimate, a1, magnitude, tol)) {
        res.converged = true;
        return res;
      }
      if (target >= opts.max_panels) return res;
      target *= 2;
    }
  }
  res.evaluations = evals;
  return res;
}

}  // namespace rmt
