#pragma once

// Shared summation engine for every series in the library. It sums terms
// until they become negligible, and otherwise diagnoses the series from the
// computed term magnitudes: a series whose terms pass through an interior
// minimum and then grow is treated as asymptotic and truncated optimally.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string_view>

namespace rmt {

enum class Convergence { Convergent, AsymptoticOptimalTruncation, Diverged };

inline std::string_view to_string(Convergence c) {
  switch (c) {
    case Convergence::Convergent: return "convergent";
    case Convergence::AsymptoticOptimalTruncation: return "asymptotic";
    case Convergence::Diverged: return "diverged";
  }
  return "unknown";
}

struct SeriesValue {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute; +inf when diverged
  int terms_used = 0;
  Convergence classification = Convergence::Convergent;

  bool trusted() const { return classification != Convergence::Diverged; }
};

struct SeriesOptions {
  double tolerance = 1e-14;  // relative size of a negligible term
  int max_terms = 500;
};

/// Sums term(0), term(1), ... under the engine policy.
///
/// - Convergent: two consecutive terms satisfy |t| <= tolerance |partial sum|.
///   The error estimate is the last term, floored by the rounding error of
///   the accumulated magnitudes.
/// - AsymptoticOptimalTruncation: the guard (max_terms or a non-finite term)
///   was reached and the smallest term sits strictly inside the examined
///   range. The value is the sum of the terms before the smallest one and the
///   error estimate is the smallest term itself (the first omitted term).
/// - A series stopped by the guard while its terms still decrease and
///   alternate in sign is accelerated by iterated averaging of the last
///   partial sums; it is reported Convergent when the accelerated estimate
///   is more accurate than the last term.
/// - Diverged: anything else. The value is the last partial sum and the
///   error estimate is +inf.
template <class TermFn>
SeriesValue sum_terms(TermFn&& term, const SeriesOptions& opts = {}) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double sum = 0.0;
  double abs_sum = 0.0;
  double min_abs = std::numeric_limits<double>::infinity();
  int min_idx = -1;
  double sum_before_min = 0.0;
  double last_abs = 0.0;
  int small_run = 0;
  int k = 0;
  constexpr int kTail = 33;
  double tail_sums[kTail];  // ring buffer of recent partial sums
  double tail_terms[kTail];

  for (; k < opts.max_terms; ++k) {
    const double t = term(k);
    if (!std::isfinite(t)) break;
    const double mag = std::fabs(t);
    if (mag < min_abs) {
      min_abs = mag;
      min_idx = k;
      sum_before_min = sum;
    }
    sum += t;
    abs_sum += mag;
    last_abs = mag;
    tail_sums[k % kTail] = sum;
    tail_terms[k % kTail] = t;
    if (mag <= opts.tolerance * std::fabs(sum)) {
      if (++small_run == 2)
        return {sum, std::fmax(mag, eps * abs_sum), k + 1, Convergence::Convergent};
    } else {
      small_run = 0;
    }
  }

  if (min_idx > 0 && min_idx < k - 1 && last_abs > min_abs)
    return {sum_before_min, min_abs, min_idx, Convergence::AsymptoticOptimalTruncation};

  if (k >= kTail && min_idx == k - 1) {
    bool alternating = true;
    for (int i = k - kTail + 1; i < k && alternating; ++i)
      alternating = (tail_terms[i % kTail] < 0) != (tail_terms[(i - 1) % kTail] < 0);
    if (alternating) {
      auto averaged = [&](int first, int count) {
        double row[kTail];
        for (int i = 0; i < count; ++i) row[i] = tail_sums[(first + i) % kTail];
        for (int level = 1; level < count; ++level)
          for (int i = 0; i + level < count; ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
        return row[0];
      };
      const int count = kTail - 1;
      const double a1 = averaged(k - count, count);
      const double a0 = averaged(k - count - 1, count);
      const double err = std::fmax(std::fabs(a1 - a0), eps * abs_sum);
      if (err < last_abs) return {a1, err, k, Convergence::Convergent};
    }
  }
  return {sum, std::numeric_limits<double>::infinity(), k, Convergence::Diverged};
}

/// Sums an explicit, finite sequence of terms.
inline SeriesValue sum_series(std::span<const double> terms, double tolerance = 1e-14) {
  SeriesOptions opts{tolerance, static_cast<int>(terms.size())};
  return sum_terms([&](int k) { return terms[static_cast<std::size_t>(k)]; }, opts);
}

}  // namespace rmt
