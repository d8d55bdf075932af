#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pizza/bounds.hpp"
#include "pizza/format.hpp"
#include "pizza/fourier.hpp"
#include "pizza/geometry.hpp"

namespace pizza::verify {

enum class Level { quick, full };

struct Options {
  Level level = Level::quick;
  // Test hook: added to one closed-form coefficient inside the agreement
  // suite, to prove the suite actually detects a wrong value.
  double coefficient_tamper = 0.0;
  std::uint64_t seed = 0x5eed5eedULL;
};

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& context) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = context;
  }
};

struct Report {
  std::vector<SuiteResult> suites;

  bool passed() const {
    for (const SuiteResult& s : suites)
      if (s.failures > 0) return false;
    return true;
  }
};

namespace detail {

inline std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> xs;
  xs.reserve(count);
  for (int i = 0; i < count; ++i)
    xs.push_back(lo + (hi - lo) * (static_cast<double>(i) / count));
  return xs;
}

inline std::string point(double alpha, double a, int n) {
  return "alpha=" + g17(alpha) + " a=" + g17(a) + " n=" + std::to_string(n);
}

inline SuiteResult coefficient_agreement(const Options& opts) {
  SuiteResult suite;
  suite.name = "coefficient closed form vs defining integral";
  const bool full = opts.level == Level::full;
  const std::vector<long> ms =
      full ? std::vector<long>{3, 5, 7, 9, 15, 21, 25, 35}
           : std::vector<long>{3, 5, 9, 15};
  const long j_max = full ? 12 : 6;
  bool tampered = false;
  for (long m : ms) {
    for (long j = 1; j <= j_max; ++j) {
      double closed = coefficient_closed_form({m, j}).value;
      if (!tampered && opts.coefficient_tamper != 0.0) {
        closed += opts.coefficient_tamper;
        tampered = true;
      }
      const double numeric = coefficient_numeric({m, j}, 1e-12);
      suite.check(std::abs(closed - numeric) < 1e-10,
                  "m=" + std::to_string(m) + " j=" + std::to_string(j) +
                      " closed=" + g17(closed) + " numeric=" + g17(numeric));
    }
  }
  return suite;
}

inline SuiteResult coefficient_structure(const Options& opts) {
  SuiteResult suite;
  suite.name = "coefficient sign, bound, and vanishing structure";
  const bool full = opts.level == Level::full;
  const std::vector<long> ms = full ? std::vector<long>{3, 5, 7, 9, 15, 21, 27, 33, 45}
                                    : std::vector<long>{3, 5, 9, 15};
  const long j_max = full ? 24 : 12;
  CoefficientCache& cache = coefficient_cache();
  for (long m : ms) {
    const int expected_sign = ((m + 1) / 2) % 2 == 0 ? +1 : -1;
    for (long j = 1; j <= j_max; ++j) {
      const CoefficientValue c = coefficient_closed_form({m, j});
      const std::string at = "m=" + std::to_string(m) + " j=" + std::to_string(j);
      if (2 * j < m - 1) {
        suite.check(c.sign == 0 && c.value == 0.0 && c.pi_multiple == 0,
                    at + ": expected zero below the leading term");
      } else {
        suite.check(c.sign == expected_sign, at + ": wrong sign");
        suite.check(std::abs(c.value) <= std::numbers::pi / 8.0 + 1e-15,
                    at + ": |c| exceeds pi/8");
        suite.check(c.is_leading == (2 * j == m - 1), at + ": leading flag");
        suite.check(cache.coefficient(m, j) == c.value,
                    at + ": cache disagrees with closed form");
      }
    }
    const CoefficientValue lead = leading_coefficient(m);
    suite.check(lead.pi_multiple == coefficient_closed_form({m, (m - 1) / 2}).pi_multiple,
                "m=" + std::to_string(m) + ": leading formula mismatch");
  }
  return suite;
}

inline SuiteResult step_spectrum(const Options& opts) {
  SuiteResult suite;
  suite.name = "step-function spectrum closed form";
  const bool full = opts.level == Level::full;
  const std::vector<int> ns = full ? std::vector<int>{3, 5, 7} : std::vector<int>{3, 5};
  const int alpha_count = full ? 4 : 2;
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> angle(0.0, two_pi);
  for (int n : ns) {
    for (int t = 0; t < alpha_count; ++t) {
      const PizzaConfig cfg(angle(rng), 0.5, n);
      for (long m = 1; m <= 10L * n; ++m) {
        const std::complex<double> numeric = step_fourier_coefficient_numeric(m, cfg);
        const std::complex<double> closed = step_fourier_coefficient_closed_form(m, cfg);
        suite.check(std::abs(numeric - closed) < 1e-12,
                    "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                        " alpha=" + g17(cfg.alpha));
      }
    }
  }
  return suite;
}

inline SuiteResult series_vs_direct(const Options& opts) {
  SuiteResult suite;
  suite.name = "series vs direct-geometry inequity";
  const bool full = opts.level == Level::full;
  const std::vector<double> as =
      full ? std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}
           : std::vector<double>{0.3, 0.7};
  const std::vector<int> ns = full ? std::vector<int>{3, 5, 7, 9} : std::vector<int>{3, 5};
  const std::vector<double> alphas = linspace(0.0, two_pi, full ? 16 : 8);
  for (double a : as) {
    for (int n : ns) {
      for (double alpha : alphas) {
        const PizzaConfig cfg(alpha, a, n);
        const SeriesResult g = inequity_series(cfg);
        const double closed = inequity_direct(cfg, DirectMethod::closed_form);
        const double quad = inequity_direct(cfg, DirectMethod::quadrature);
        const double tol = g.truncation_bound + 1e-9;
        suite.check(std::abs(g.value - closed) <= tol,
                    point(alpha, a, n) + " closed-form delta " +
                        g17(std::abs(g.value - closed)));
        suite.check(std::abs(g.value - quad) <= tol,
                    point(alpha, a, n) + " quadrature delta " +
                        g17(std::abs(g.value - quad)));
      }
    }
  }
  return suite;
}

inline SuiteResult slice_areas(const Options& opts) {
  SuiteResult suite;
  suite.name = "slice areas: closed form vs quadrature";
  const bool full = opts.level == Level::full;
  const std::vector<double> as =
      full ? std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}
           : std::vector<double>{0.2, 0.6};
  std::vector<int> ns;
  for (int n = 2; n <= (full ? 9 : 5); ++n) ns.push_back(n);
  const std::vector<double> alphas = linspace(0.0, two_pi, full ? 16 : 4);
  for (double a : as) {
    for (int n : ns) {
      for (double alpha : alphas) {
        const PizzaConfig cfg(alpha, a, n);
        double total = 0.0;
        for (int k = 1; k <= 2 * n; ++k) {
          const double closed = slice_area_closed_form(cfg, k);
          const double quad = slice_area_quadrature(cfg, k);
          total += closed;
          suite.check(closed > 0.0, point(alpha, a, n) + " k=" + std::to_string(k) +
                                        ": nonpositive area");
          suite.check(std::abs(closed - quad) < 1e-10,
                      point(alpha, a, n) + " k=" + std::to_string(k) +
                          " delta=" + g17(std::abs(closed - quad)));
        }
        suite.check(std::abs(total - std::numbers::pi) < 1e-10,
                    point(alpha, a, n) + ": slice areas do not sum to pi");
      }
    }
  }
  return suite;
}

// 2n divisible by 4 (and greater than 4): the alternating slice totals agree
// exactly, so the direct inequity must vanish.
inline SuiteResult four_fold_slice_counts(const Options& opts) {
  SuiteResult suite;
  suite.name = "inequity vanishes for slice counts divisible by four";
  const bool full = opts.level == Level::full;
  std::mt19937_64 rng(opts.seed + 1);
  std::uniform_real_distribution<double> angle(0.0, two_pi);
  std::uniform_real_distribution<double> offset(0.01, 0.97);
  const int cases = full ? 50 : 10;
  for (int n : {4, 6, 8}) {
    for (int t = 0; t < cases; ++t) {
      const PizzaConfig cfg(angle(rng), offset(rng), n);
      const double g = inequity_direct(cfg, DirectMethod::closed_form);
      suite.check(std::abs(g) < 1e-10, point(cfg.alpha, cfg.a, n) + " g=" + g17(g));
    }
  }
  return suite;
}

inline SuiteResult inequity_bounds(const Options& opts) {
  SuiteResult suite;
  suite.name = "headline inequity bounds";
  const bool full = opts.level == Level::full;
  std::mt19937_64 rng(opts.seed + 2);
  std::uniform_real_distribution<double> angle(0.0, two_pi);
  std::uniform_real_distribution<double> offset(0.01, 0.99);
  std::uniform_int_distribution<int> pick_n(0, 2);
  const int ns[3] = {3, 5, 7};

  // 1e-14 margin: the direct oracle's rounding floor sits at a few 1e-15,
  // which can top the true bound when the offset is tiny.
  const int random_cases = full ? 1000 : 100;
  for (int t = 0; t < random_cases; ++t) {
    const int n = ns[pick_n(rng)];
    const PizzaConfig cfg(angle(rng), offset(rng), n);
    const double g = inequity_direct(cfg, DirectMethod::closed_form);
    suite.check(std::abs(g) < inequity_bound(cfg.a, n) + 1e-14,
                point(cfg.alpha, cfg.a, n) + " |g|=" + g17(std::abs(g)));
  }

  for (double a = 0.05; a < 0.96; a += 0.1) {
    for (int n : {3, 5, 7, 9}) {
      const SeriesResult m = max_reduced_inequity(a, n);
      const double bound = reduced_inequity_bound(a, n);
      suite.check(m.value > 0.0, "a=" + g17(a) + " n=" + std::to_string(n) +
                                     ": max must be positive");
      suite.check(m.value < bound + 1e-15,
                  "a=" + g17(a) + " n=" + std::to_string(n) + " M=" + g17(m.value) +
                      " bound=" + g17(bound));
    }
  }

  // The direct inequity respects the exact maximum a * M_a, not just the
  // loose closed-form bound.
  const std::vector<std::pair<double, int>> scan_cases =
      full ? std::vector<std::pair<double, int>>{{0.3, 3}, {0.7, 3}, {0.5, 5}, {0.7, 7}}
           : std::vector<std::pair<double, int>>{{0.5, 3}};
  const int scan_points = full ? 720 : 90;
  for (const auto& [a, n] : scan_cases) {
    const SeriesResult m = max_reduced_inequity(a, n);
    const double cap = a * (m.value + m.truncation_bound) + 1e-10;
    for (double alpha : linspace(0.0, two_pi, scan_points)) {
      const double g = inequity_direct(PizzaConfig(alpha, a, n), DirectMethod::closed_form);
      suite.check(std::abs(g) <= cap, point(alpha, a, n) + " |g|=" + g17(std::abs(g)) +
                                          " exceeds a*M_a=" + g17(cap));
    }
  }
  return suite;
}

inline SuiteResult symmetry(const Options& opts) {
  SuiteResult suite;
  suite.name = "symmetry and periodicity";
  const bool full = opts.level == Level::full;
  std::mt19937_64 rng(opts.seed + 3);
  std::uniform_real_distribution<double> angle(0.0, two_pi);
  std::uniform_real_distribution<double> offset(0.05, 0.95);
  std::uniform_int_distribution<int> pick_n(0, 3);
  const int ns[4] = {3, 5, 7, 9};
  const int cases = full ? 200 : 50;
  for (int t = 0; t < cases; ++t) {
    const int n = ns[pick_n(rng)];
    const double a = offset(rng);
    const double alpha = angle(rng);
    const PizzaConfig cfg(alpha, a, n);

    const SeriesResult f = reduced_inequity_series(cfg);
    const SeriesResult f_neg = reduced_inequity_series(PizzaConfig(-alpha, a, n));
    suite.check(std::abs(f_neg.value + f.value) <=
                    f.truncation_bound + f_neg.truncation_bound,
                point(alpha, a, n) + ": f not odd in alpha");

    const SeriesResult f_per =
        reduced_inequity_series(PizzaConfig(alpha + two_pi / n, a, n));
    suite.check(std::abs(f_per.value - f.value) <=
                    f.truncation_bound + f_per.truncation_bound,
                point(alpha, a, n) + ": f not 2 pi / n periodic");

    const SeriesResult g = inequity_series(cfg);
    const SeriesResult g_flip =
        inequity_series(PizzaConfig(alpha + std::numbers::pi / n, a, n));
    suite.check(std::abs(g_flip.value + g.value) <=
                    g.truncation_bound + g_flip.truncation_bound,
                point(alpha, a, n) + ": g does not flip sign over pi / n");
  }
  return suite;
}

inline SuiteResult extremum_certification(const Options& opts) {
  SuiteResult suite;
  suite.name = "extremum certification";
  const bool full = opts.level == Level::full;
  const std::vector<double> as =
      full ? std::vector<double>{0.3, 0.5, 0.7, 0.9} : std::vector<double>{0.5};
  const std::vector<int> ns = full ? std::vector<int>{3, 5, 7, 9} : std::vector<int>{3, 5};
  const int scan_points = full ? 720 : 120;
  for (double a : as) {
    for (int n : ns) {
      const ExtremumReport report = extremum(a, n);
      const SeriesResult at_peak =
          reduced_inequity_series(PizzaConfig(report.argmax_alpha, a, n));
      const double combined =
          at_peak.truncation_bound + report.max_value.truncation_bound + 1e-15;
      suite.check(std::abs(at_peak.value -
                           report.sign_at_argmax * report.max_value.value) <= combined,
                  "a=" + g17(a) + " n=" + std::to_string(n) +
                      ": f(pi/2n) != sign * M_a");
      suite.check(report.max_value.value < report.max_value_bound,
                  "a=" + g17(a) + " n=" + std::to_string(n) + ": M_a >= bound");

      double best = -1.0;
      double best_alpha = 0.0;
      for (double alpha : linspace(0.0, two_pi, scan_points)) {
        const double f = reduced_inequity_series(PizzaConfig(alpha, a, n)).value;
        suite.check(std::abs(f) <= report.max_value.value + 1e-9,
                    point(alpha, a, n) + ": |f| exceeds M_a");
        if (std::abs(f) > best) {
          best = std::abs(f);
          best_alpha = alpha;
        }
      }
      // |f| has period pi/n and peaks at pi/2n modulo that period.
      const double period = std::numbers::pi / n;
      const double step = two_pi / scan_points;
      double delta = std::fmod(best_alpha - report.argmax_alpha, period);
      if (delta < 0.0) delta += period;
      delta = std::min(delta, period - delta);
      suite.check(delta <= step + 1e-12,
                  "a=" + g17(a) + " n=" + std::to_string(n) +
                      ": scan peak not at pi/2n (delta=" + g17(delta) + ")");
    }
  }
  return suite;
}

}  // namespace detail

inline Report run(const Options& opts) {
  Report report;
  report.suites.push_back(detail::coefficient_agreement(opts));
  report.suites.push_back(detail::coefficient_structure(opts));
  report.suites.push_back(detail::step_spectrum(opts));
  report.suites.push_back(detail::series_vs_direct(opts));
  report.suites.push_back(detail::slice_areas(opts));
  report.suites.push_back(detail::four_fold_slice_counts(opts));
  report.suites.push_back(detail::inequity_bounds(opts));
  report.suites.push_back(detail::symmetry(opts));
  report.suites.push_back(detail::extremum_certification(opts));
  return report;
}

inline std::string summarize(const Report& report) {
  std::string text;
  for (const SuiteResult& suite : report.suites) {
    text += suite.failures == 0 ? "[PASS] " : "[FAIL] ";
    text += suite.name;
    text += " (" + std::to_string(suite.checks) + " checks";
    if (suite.failures > 0) {
      text += ", " + std::to_string(suite.failures) + " failures";
    }
    text += ")\n";
    if (suite.failures > 0) {
      text += "       first failure: " + suite.first_failure + "\n";
    }
  }
  return text;
}

}  // namespace pizza::verify
