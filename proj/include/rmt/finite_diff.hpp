#pragma once

// Central finite differences with Richardson extrapolation over step halvings.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "error.hpp"

namespace rmt {

struct DerivativeEstimate {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;  // false when extrapolation never reduced the error
};

/// Default first step for an n-th derivative at x.
inline double default_fd_step(int n, double x) {
  const double scale = std::max(1.0, std::fabs(x));
  return 0.1 * scale * std::max(1.0, 0.5 * n);
}

namespace detail {

template <class F>
DerivativeEstimate ridders(F& f, int n, double x, double h0, int max_levels) {
  std::vector<double> binom(static_cast<std::size_t>(n) + 1, 1.0);
  for (int k = 1; k <= n; ++k) binom[k] = binom[k - 1] * (n - k + 1) / k;

  auto central = [&](double h) {
    double s = 0.0;
    for (int k = 0; k <= n; ++k) {
      const double c = (k % 2 == 0 ? 1.0 : -1.0) * binom[k];
      s += c * f(x + (0.5 * n - k) * h);
    }
    return s / std::pow(h, n);
  };

  constexpr double shrink = 1.4;
  constexpr double ratio = shrink * shrink;
  std::vector<double> prev{central(h0)};
  DerivativeEstimate best{prev[0], std::numeric_limits<double>::infinity(), false};
  double h = h0;

  for (int i = 1; i <= max_levels; ++i) {
    h /= shrink;
    std::vector<double> row{central(h)};
    double fac = ratio;
    for (int j = 1; j <= i; ++j) {
      row.push_back((row[j - 1] * fac - prev[j - 1]) / (fac - 1.0));
      fac *= ratio;
      const double err = std::fmax(std::fabs(row[j] - row[j - 1]), std::fabs(row[j] - prev[j - 1]));
      if (err <= best.error_estimate) best = {row[j], err, true};
    }
    if (i >= 4 && std::fabs(row[i] - prev[i - 1]) >= 2.0 * best.error_estimate) break;
    prev = std::move(row);
  }
  if (!std::isfinite(best.value) || !std::isfinite(best.error_estimate)) best.converged = false;
  return best;
}

}  // namespace detail

/// n-th derivative of f at x.
///
/// The central difference
///   D(h) = h^-n sum_k (-1)^k C(n,k) f(x + (n/2 - k) h)
/// has an error expansion in even powers of h. Steps shrink geometrically from
/// h0 and a Neville tableau extrapolates to h = 0; every tableau entry gets an
/// error estimate from its neighbours and the best one is returned. The
/// refinement stops once the diagonal error exceeds twice the best error,
/// which is where round-off takes over.
///
/// With the default step, high orders lose digits to round-off before the
/// tableau settles, so larger starting steps are tried as well. A larger-step
/// result is kept only if it improves the error estimate and agrees with the
/// current best within twice their combined error estimates.
template <class F>
DerivativeEstimate finite_diff_oracle(F&& f, int n, double x, double h0 = 0.0,
                                      int max_levels = 10) {
  if (n < 0 || n > 8) throw DomainError("finite_diff_oracle: order must be in [0, 8]");
  if (n == 0) return {f(x), 0.0, true};
  const bool widen = h0 <= 0.0;
  if (widen) h0 = default_fd_step(n, x);

  DerivativeEstimate best = detail::ridders(f, n, x, h0, max_levels);
  if (!widen || !best.converged) return best;
  for (double scale : {2.0, 4.0}) {
    DerivativeEstimate wide = detail::ridders(f, n, x, scale * h0, max_levels);
    if (!wide.converged || wide.error_estimate >= best.error_estimate ||
        std::fabs(wide.value - best.value) > 2.0 * (best.error_estimate + wide.error_estimate))
      break;
    best = wide;
  }
  return best;
}

}  // namespace rmt
