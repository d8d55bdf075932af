#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pizza/errors.hpp"
#include "pizza/geometry.hpp"
#include "pizza/kahan.hpp"
#include "pizza/quadrature.hpp"
#include "pizza/rational.hpp"

namespace pizza {

// The inequity divided by the offset expands as
//
//   f(alpha, a, n) = sum over odd multiples m of n of (4n / pi m) P_m(a) sin(m alpha),
//
// where P_m(x) = sum_{j >= 1} c_{2j}(m) x^{2j}. Every nonzero c_{2j}(m) is a
// rational multiple of pi with sign (-1)^{(m+1)/2}, vanishes for 2j < m - 1,
// and satisfies |c_{2j}(m)| <= pi/8, which is what makes the geometric tail
// bounds below rigorous.

struct CoefficientKey {
  long m = 3;  // frequency: odd, >= 3
  long j = 1;  // power index: the coefficient multiplies a^{2j}
};

struct CoefficientValue {
  Rational pi_multiple;     // exact value divided by pi
  double value = 0.0;       // floating-point value
  int sign = 0;             // -1, 0, +1
  bool is_leading = false;  // lowest-order nonzero term: 2j == m - 1
};

struct TruncationPolicy {
  double target_abs_error = 1e-12;
  long max_j_per_m = 10'000;
  long max_m_terms = 1'000;
};

struct TermCounts {
  long m_terms = 0;
  long j_terms = 0;
};

struct SeriesResult {
  double value = 0.0;
  double truncation_bound = 0.0;  // rigorous bound on everything left out
  TermCounts terms_used;
};

namespace detail {

inline void require_frequency(long m) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("frequency m must be odd and >= 3");
}

inline void require_key(const CoefficientKey& key) {
  require_frequency(key.m);
  if (key.j < 1) throw std::invalid_argument("power index j must be >= 1");
}

inline void require_series_offset(double a) {
  if (!(a > 0.0) || a >= 1.0)
    throw InvalidOffset("series offset must lie in (0, 1)");
  if (a >= 0.999)
    throw NearSingularOffset("offset too close to 1: tail bounds degenerate");
}

inline int coefficient_sign(long m) { return ((m + 1) / 2) % 2 == 0 ? +1 : -1; }

inline double ipow(double base, long exponent) {
  double result = 1.0;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

struct ExactRatio {
  BigInt num;
  BigInt den;
};

// Exact rational part of the leading coefficient c_{m-1}(m):
// sign(m) |C(1/2, (m-1)/2)| / 2^{m-1}. Uses the central-binomial identity
// |C(1/2, j)| = C(2j, j) / (4^j (2j - 1)), valid for j >= 1, which costs one
// binomial instead of a length-j rational recurrence.
inline ExactRatio leading_pi_ratio(long m) {
  const long j = (m - 1) / 2;
  ExactRatio r;
  r.num = binomial(2 * j, j);
  if (coefficient_sign(m) < 0) r.num = -r.num;
  r.den = BigInt(2 * j - 1) << (2 * j + m - 1);
  return r;
}

inline Rational leading_pi_multiple(long m) {
  const ExactRatio r = leading_pi_ratio(m);
  return Rational(r.num, r.den);
}

}  // namespace detail

// c_{2j}(m) = sign(m) (pi / 2^{2j}) |C(1/2, j)| [C(2j, (2j-m+1)/2) - C(2j, (2j-m-1)/2)],
// evaluated in exact integer and rational arithmetic so the binomial
// difference carries no cancellation error; the result is rounded to double
// exactly once.
inline CoefficientValue coefficient_closed_form(const CoefficientKey& key) {
  detail::require_key(key);
  const long m = key.m;
  const long j = key.j;
  CoefficientValue out;
  out.is_leading = (2 * j == m - 1);
  if (2 * j < m - 1) return out;  // below the leading term
  const long u = (2 * j - m + 1) / 2;
  const BigInt difference = binomial(2 * j, u) - binomial(2 * j, u - 1);
  if (difference == 0) return out;
  Rational r = abs(half_binomial(j));
  r *= difference;
  r /= Rational(BigInt(1) << (2 * j));
  const int sign = detail::coefficient_sign(m);
  if (sign < 0) r = -r;
  out.pi_multiple = r;
  out.value = to_double(r) * std::numbers::pi;
  out.sign = sign;
  return out;
}

/// The leading (lowest-order) coefficient of the frequency-m power series.
inline CoefficientValue leading_coefficient(long m) {
  detail::require_frequency(m);
  CoefficientValue out;
  out.pi_multiple = detail::leading_pi_multiple(m);
  out.value = to_double(out.pi_multiple) * std::numbers::pi;
  out.sign = detail::coefficient_sign(m);
  out.is_leading = true;
  return out;
}

// Defining integral for c_{2j}(m):
//   (-1)^j C(1/2, j) \int_0^{2pi} cos(theta) cos(m theta) sin^{2j}(theta) dtheta.
// Cross-check oracle for coefficient_closed_form; never used in summation.
inline double coefficient_numeric(const CoefficientKey& key, double tol = 1e-12) {
  detail::require_key(key);
  if (!(tol > 0.0)) throw std::invalid_argument("coefficient_numeric: tol must be positive");
  const long m = key.m;
  const long j = key.j;
  QuadratureRequest req;
  req.integrand = [m, j](double theta) {
    const double s = std::sin(theta);
    return std::cos(theta) * std::cos(static_cast<double>(m) * theta) *
           detail::ipow(s * s, j);
  };
  req.lower = 0.0;
  req.upper = two_pi;
  req.abs_tol = tol;
  const double integral = integrate(req).value;
  const double factor =
      (key.j % 2 == 0 ? 1.0 : -1.0) * to_double(half_binomial(key.j));
  return factor * integral;
}

// Memoized per-frequency coefficient tables. A row starts from the exact
// leading rational and extends on demand: stepping j -> j+1 multiplies the
// exact value by (2j-1)(2j+1) / ((2j-m+3)(2j+m+3)), and each entry is rounded
// to double exactly once. The running value is an explicit exact
// numerator/denominator pair that is never reduced: the step factors are a
// few words, so multiplies and the scaled conversion stay linear in the
// operand size, and max_j_per_m caps that size. Access is serialized behind
// a mutex.
class CoefficientCache {
 public:
  double coefficient(long m, long j) {
    detail::require_key({m, j});
    const long j0 = (m - 1) / 2;
    if (j < j0) return 0.0;
    std::scoped_lock lock(mutex_);
    Row& row = rows_[m];
    if (row.values.empty()) {
      detail::ExactRatio leading = detail::leading_pi_ratio(m);
      row.num = std::move(leading.num);
      row.den = std::move(leading.den);
      row.cursor_j = j0;
      row.values.push_back(ratio_to_double(row.num, row.den) * std::numbers::pi);
    }
    while (row.cursor_j < j) {
      const long cj = row.cursor_j;
      row.num *= BigInt(2 * cj - 1) * (2 * cj + 1);
      row.den *= BigInt(2 * cj - m + 3) * (2 * cj + m + 3);
      ++row.cursor_j;
      row.values.push_back(ratio_to_double(row.num, row.den) * std::numbers::pi);
    }
    return row.values[j - j0];
  }

 private:
  struct Row {
    BigInt num;  // exact c_{2 cursor_j}(m) / pi, not necessarily in lowest terms
    BigInt den = 1;
    long cursor_j = 0;
    std::vector<double> values;  // values[i] = c_{2(j0 + i)}(m)
  };

  std::mutex mutex_;
  std::map<long, Row> rows_;
};

inline CoefficientCache& coefficient_cache() {
  static CoefficientCache cache;
  return cache;
}

// P_m(a): sum of c_{2j}(m) a^{2j} for j >= (m-1)/2, accumulated in ascending j
// with compensation. policy.target_abs_error is this frequency's share of the
// total error budget. After the last included index J the discarded tail is
// at most (pi/8) a^{2(J+1)} / (1 - a^2), which is what truncation_bound
// reports.
inline SeriesResult offset_power_series(double a, long m, const TruncationPolicy& policy) {
  detail::require_frequency(m);
  detail::require_series_offset(a);
  if (!(policy.target_abs_error > 0.0))
    throw std::invalid_argument("target_abs_error must be positive");
  const long first_j = (m - 1) / 2;
  const double a2 = a * a;
  const double tail_scale = (std::numbers::pi / 8.0) / (1.0 - a2);
  CoefficientCache& cache = coefficient_cache();
  KahanAccumulator<double> acc;
  double a_power = std::pow(a, 2.0 * static_cast<double>(first_j));  // a^{2j}
  SeriesResult out;
  out.terms_used.m_terms = 1;
  for (long j = first_j;; ++j) {
    if (out.terms_used.j_terms >= policy.max_j_per_m)
      throw BudgetExhausted("offset_power_series: term cap hit before tail bound met");
    acc += cache.coefficient(m, j) * a_power;
    ++out.terms_used.j_terms;
    a_power *= a2;
    const double tail = tail_scale * a_power;
    if (tail <= policy.target_abs_error) {
      out.value = acc.value();
      out.truncation_bound = tail;
      return out;
    }
  }
}

namespace detail {

struct FrequencyPlan {
  long term_count = 0;        // included frequencies n, 3n, ..., (2 term_count - 1) n
  double per_term_target = 0.0;  // j-tail budget handed to each offset_power_series
  double tail_bound = 0.0;    // bound on all omitted frequencies
};

// Frequencies are cut off once the geometric tail bound
// a^{m0 - 1} / (2 (1 - a^2)(1 - a^{2n})), m0 the first omitted frequency,
// drops below half the error target. The other half of the budget is split
// across the included frequencies in proportion to their 4n/(pi m) weights,
// which hands every frequency the same per-series target.
inline FrequencyPlan plan_frequency_sum(double a, int n, const TruncationPolicy& policy) {
  require_odd_n(n);
  require_series_offset(a);
  if (!(policy.target_abs_error > 0.0))
    throw std::invalid_argument("target_abs_error must be positive");
  const double half_target = 0.5 * policy.target_abs_error;
  const double denom = 2.0 * (1.0 - a * a) * (1.0 - std::pow(a, 2.0 * n));
  double weight_sum = 0.0;
  long count = 0;
  for (long m = n; count < policy.max_m_terms; m += 2 * n) {
    ++count;
    weight_sum += 4.0 * n / (std::numbers::pi * static_cast<double>(m));
    const long first_omitted = m + 2 * n;
    const double tail = std::pow(a, static_cast<double>(first_omitted - 1)) / denom;
    if (tail <= half_target) return {count, half_target / weight_sum, tail};
  }
  throw BudgetExhausted("frequency plan: m-term cap hit before tail bound met");
}

// Shared frequency loop: term_value(m, weight, series) maps each frequency's
// power-series value into the running sum. Ascending j within ascending m,
// compensated at both levels.
template <typename TermValue>
SeriesResult sum_over_frequencies(double a, int n, const TruncationPolicy& policy,
                                  TermValue&& term_value) {
  const FrequencyPlan plan = plan_frequency_sum(a, n, policy);
  TruncationPolicy per_term = policy;
  per_term.target_abs_error = plan.per_term_target;
  KahanAccumulator<double> acc;
  double j_tails = 0.0;
  SeriesResult out;
  long count = 0;
  for (long m = n; count < plan.term_count; m += 2 * n) {
    ++count;
    const double weight = 4.0 * n / (std::numbers::pi * static_cast<double>(m));
    const SeriesResult series = offset_power_series(a, m, per_term);
    acc += term_value(m, weight, series);
    j_tails += weight * series.truncation_bound;
    out.terms_used.j_terms += series.terms_used.j_terms;
  }
  out.terms_used.m_terms = plan.term_count;
  out.value = acc.value();
  out.truncation_bound = j_tails + plan.tail_bound;
  return out;
}

}  // namespace detail

/// f(alpha, a, n) = inequity / a, summed to the policy's error target.
inline SeriesResult reduced_inequity_series(const PizzaConfig& cfg,
                                            const TruncationPolicy& policy = {}) {
  const double alpha = cfg.alpha;
  return detail::sum_over_frequencies(
      cfg.a, cfg.n, policy,
      [alpha](long m, double weight, const SeriesResult& series) {
        return weight * series.value * std::sin(static_cast<double>(m) * alpha);
      });
}

/// g(alpha, a, n) = a * f(alpha, a, n), bound scaled the same way.
inline SeriesResult inequity_series(const PizzaConfig& cfg,
                                    const TruncationPolicy& policy = {}) {
  SeriesResult result = reduced_inequity_series(cfg, policy);
  result.value *= cfg.a;
  result.truncation_bound *= cfg.a;
  return result;
}

}  // namespace pizza
