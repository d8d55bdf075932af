#pragma once

#include <cmath>
#include <numbers>

#include "pizza/fourier.hpp"

namespace pizza {

/// a^{n-1} / (2 (1-a^2)(1-a^{2n})): upper bound on the maximum of |inequity|/a.
inline double reduced_inequity_bound(double a, int n) {
  if (!(a > 0.0) || a >= 1.0)
    throw InvalidOffset("reduced_inequity_bound: offset must lie in (0, 1)");
  require_odd_n(n);
  const double denom = 2.0 * (1.0 - a * a) * (1.0 - std::pow(a, 2.0 * n));
  return std::pow(a, static_cast<double>(n - 1)) / denom;
}

/// a^n / (2 (1-a^2)(1-a^{2n})): upper bound on |inequity| at any angle.
inline double inequity_bound(double a, int n) {
  return a * reduced_inequity_bound(a, n);  // keeps bound_g = a * bound_m exact
}

// M_a: the exact maximum of |inequity|/a over the first-ray angle, as the
// weighted sum of |P_m(a)| over odd multiples m of n. Shares the truncation
// plan of reduced_inequity_series, so the two agree at the extremum to within
// their combined bounds.
inline SeriesResult max_reduced_inequity(double a, int n,
                                         const TruncationPolicy& policy = {}) {
  return detail::sum_over_frequencies(
      a, n, policy, [](long, double weight, const SeriesResult& series) {
        return weight * std::abs(series.value);
      });
}

struct ExtremumReport {
  SeriesResult max_value;        // M_a with its truncation bound
  double argmax_alpha = 0.0;     // pi / (2n)
  int sign_at_argmax = 0;        // +1 when n = 3 (mod 4), -1 when n = 1 (mod 4)
  double max_value_bound = 0.0;  // reduced_inequity_bound(a, n)
  double inequity_bound = 0.0;   // a * max_value_bound
};

inline ExtremumReport extremum(double a, int n, const TruncationPolicy& policy = {}) {
  ExtremumReport report;
  report.max_value = max_reduced_inequity(a, n, policy);
  report.argmax_alpha = std::numbers::pi / (2.0 * n);
  report.sign_at_argmax = (n % 4 == 3) ? +1 : -1;
  report.max_value_bound = reduced_inequity_bound(a, n);
  report.inequity_bound = a * report.max_value_bound;
  return report;
}

}  // namespace pizza
