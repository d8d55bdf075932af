#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "pizza/fourier.hpp"
#include "pizza/geometry.hpp"

using namespace pizza;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("closed-form coefficients at the published reference points") {
  const CoefficientValue c23 = coefficient_closed_form({3, 1});
  REQUIRE(c23.pi_multiple == Rational(1, 8));
  REQUIRE(std::abs(c23.value - kPi / 8.0) <= 1e-15);
  REQUIRE(c23.sign == +1);
  REQUIRE(c23.is_leading);

  const CoefficientValue c43 = coefficient_closed_form({3, 2});
  REQUIRE(c43.pi_multiple == Rational(3, 128));
  REQUIRE(std::abs(c43.value - 3.0 * kPi / 128.0) <= 1e-15);
  REQUIRE(c43.sign == +1);
  REQUIRE_FALSE(c43.is_leading);

  const CoefficientValue c45 = coefficient_closed_form({5, 2});
  REQUIRE(c45.pi_multiple == Rational(-1, 128));
  REQUIRE(std::abs(c45.value - (-kPi / 128.0)) <= 1e-15);
  REQUIRE(c45.sign == -1);
  REQUIRE(c45.is_leading);
}

TEST_CASE("coefficients vanish below the leading term") {
  const CoefficientValue c25 = coefficient_closed_form({5, 1});
  REQUIRE(c25.sign == 0);
  REQUIRE(c25.value == 0.0);
  REQUIRE(c25.pi_multiple == 0);
  for (long m : {7L, 9L, 15L})
    for (long j = 1; 2 * j < m - 1; ++j)
      REQUIRE(coefficient_closed_form({m, j}).value == 0.0);
}

TEST_CASE("central-binomial identity for the half binomial") {
  // |C(1/2, j)| = C(2j, j) / (4^j (2j - 1)) for j >= 1; the leading
  // coefficient path relies on it.
  for (long j = 1; j <= 60; ++j) {
    const Rational identity(binomial(2 * j, j), (BigInt(1) << (2 * j)) * (2 * j - 1));
    REQUIRE(abs(half_binomial(j)) == identity);
  }
}

TEST_CASE("leading coefficient formula matches the general closed form") {
  REQUIRE(leading_coefficient(3).pi_multiple == Rational(1, 8));
  REQUIRE(leading_coefficient(5).pi_multiple == Rational(-1, 128));
  REQUIRE(leading_coefficient(7).sign == +1);
  REQUIRE(leading_coefficient(9).sign == -1);
  for (long m : {3L, 5L, 7L, 9L, 15L, 21L}) {
    const CoefficientValue lead = leading_coefficient(m);
    const CoefficientValue general = coefficient_closed_form({m, (m - 1) / 2});
    REQUIRE(lead.pi_multiple == general.pi_multiple);
    REQUIRE(lead.value == general.value);
    REQUIRE(lead.is_leading);
  }
}

TEST_CASE("sign structure and the uniform pi/8 bound") {
  for (long m : {3L, 5L, 7L, 9L, 15L, 21L}) {
    const int expected = ((m + 1) / 2) % 2 == 0 ? +1 : -1;
    for (long j = 1; j <= 16; ++j) {
      const CoefficientValue c = coefficient_closed_form({m, j});
      if (2 * j < m - 1) {
        REQUIRE(c.sign == 0);
      } else {
        REQUIRE(c.sign == expected);
        REQUIRE(std::abs(c.value) <= kPi / 8.0 + 1e-15);
      }
    }
  }
}

TEST_CASE("coefficient keys are validated") {
  REQUIRE_THROWS_AS(coefficient_closed_form({4, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(coefficient_closed_form({1, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(coefficient_closed_form({3, 0}), std::invalid_argument);
  REQUIRE_THROWS_AS(leading_coefficient(6), std::invalid_argument);
  REQUIRE_THROWS_AS(coefficient_numeric({3, 1}, 0.0), std::invalid_argument);
}

TEST_CASE("numeric coefficient integral agrees with the closed form") {
  REQUIRE(std::abs(coefficient_numeric({3, 1}) - kPi / 8.0) <= 1e-12);
  REQUIRE(std::abs(coefficient_numeric({9, 4}) - coefficient_closed_form({9, 4}).value) <=
          1e-11);
  REQUIRE(std::abs(coefficient_numeric({3, 10}) - coefficient_closed_form({3, 10}).value) <=
          1e-10);
  for (long m : {3L, 5L, 9L}) {
    for (long j = 1; j <= 8; ++j) {
      REQUIRE(std::abs(coefficient_numeric({m, j}) -
                       coefficient_closed_form({m, j}).value) <= 1e-10);
    }
  }
}

TEST_CASE("coefficient cache reproduces the closed form exactly") {
  CoefficientCache& cache = coefficient_cache();
  for (long m : {3L, 5L, 9L, 21L}) {
    const long j0 = (m - 1) / 2;
    for (long j = j0; j <= j0 + 40; ++j)
      REQUIRE(cache.coefficient(m, j) == coefficient_closed_form({m, j}).value);
    REQUIRE(cache.coefficient(m, 1 > j0 - 1 ? 1 : j0 - 1) ==
            coefficient_closed_form({m, 1 > j0 - 1 ? 1 : j0 - 1}).value);
  }
}

TEST_CASE("offset power series is dominated by its leading term as a -> 0") {
  TruncationPolicy tight;
  tight.target_abs_error = 1e-16;
  const double a = 1e-3;
  const SeriesResult p = offset_power_series(a, 3, tight);
  REQUIRE(std::abs(p.value / (a * a) - kPi / 8.0) <= 1e-7);
}

TEST_CASE("offset power series keeps the frequency sign everywhere") {
  for (long m : {3L, 5L, 9L, 15L}) {
    const int expected = ((m + 1) / 2) % 2 == 0 ? +1 : -1;
    for (double a = 0.1; a < 0.95; a += 0.1) {
      const SeriesResult p = offset_power_series(a, m, {});
      REQUIRE(p.value != 0.0);
      REQUIRE((p.value > 0.0 ? +1 : -1) == expected);
    }
  }
}

TEST_CASE("offset power series respects its geometric bound") {
  for (long m : {3L, 9L, 15L}) {
    for (double a = 0.1; a < 0.95; a += 0.1) {
      const SeriesResult p = offset_power_series(a, m, {});
      const double bound = (kPi / 8.0) * std::pow(a, double(m - 1)) / (1.0 - a * a);
      REQUIRE(std::abs(p.value) <= bound * (1.0 + 1e-12));
      REQUIRE(p.truncation_bound <= 1e-12);
    }
  }
}

TEST_CASE("offset power series matches term-by-term numeric summation") {
  // Oracle: accumulate coefficient_numeric(3, j) (0.5)^{2j} until the same
  // pi/8 geometric tail drops below 1e-13.
  const double a = 0.5;
  double oracle = 0.0;
  for (long j = 1;; ++j) {
    oracle += coefficient_numeric({3, j}, 1e-13) * std::pow(a, 2.0 * double(j));
    const double tail =
        (kPi / 8.0) * std::pow(a, 2.0 * double(j + 1)) / (1.0 - a * a);
    if (tail < 1e-13) break;
  }
  const SeriesResult p = offset_power_series(a, 3, {});
  REQUIRE(std::abs(p.value - oracle) <= 1e-11);
}

TEST_CASE("series domain errors") {
  REQUIRE_THROWS_AS(offset_power_series(0.0, 3, {}), InvalidOffset);
  REQUIRE_THROWS_AS(offset_power_series(1.0, 3, {}), InvalidOffset);
  REQUIRE_THROWS_AS(offset_power_series(0.9995, 3, {}), NearSingularOffset);
  REQUIRE_THROWS_AS(reduced_inequity_series(PizzaConfig(0.3, 0.5, 4)), EvenN);
  REQUIRE_THROWS_AS(reduced_inequity_series(PizzaConfig(0.3, 0.5, 1)), NEqualsOne);
  REQUIRE_THROWS_AS(reduced_inequity_series(PizzaConfig(0.3, 0.0, 3)), InvalidOffset);

  TruncationPolicy tiny_budget;
  tiny_budget.max_j_per_m = 3;
  REQUIRE_THROWS_AS(offset_power_series(0.9, 3, tiny_budget), BudgetExhausted);
  TruncationPolicy tiny_m_budget;
  tiny_m_budget.max_m_terms = 2;
  REQUIRE_THROWS_AS(reduced_inequity_series(PizzaConfig(0.3, 0.9, 3), tiny_m_budget),
                    BudgetExhausted);
}

TEST_CASE("series value is exactly zero at alpha = 0") {
  for (int n : {3, 5, 9}) {
    REQUIRE(reduced_inequity_series(PizzaConfig(0.0, 0.5, n)).value == 0.0);
    REQUIRE(inequity_series(PizzaConfig(0.0, 0.5, n)).value == 0.0);
  }
}

TEST_CASE("series truncation bound meets the policy target") {
  std::mt19937 rng(83);
  std::uniform_real_distribution<double> angle(0.0, two_pi);
  std::uniform_real_distribution<double> offset(0.05, 0.95);
  for (int n : {3, 5, 7, 9}) {
    for (int t = 0; t < 5; ++t) {
      const SeriesResult f = reduced_inequity_series(PizzaConfig(angle(rng), offset(rng), n));
      REQUIRE(f.truncation_bound <= 1e-12);
      REQUIRE(f.terms_used.m_terms >= 1);
      REQUIRE(f.terms_used.j_terms >= f.terms_used.m_terms);
    }
  }
}

TEST_CASE("reduced series equals the direct inequity divided by the offset") {
  const PizzaConfig cfg(0.7, 0.4, 5);
  const SeriesResult f = reduced_inequity_series(cfg);
  const double direct = inequity_direct(cfg, DirectMethod::quadrature);
  REQUIRE(std::abs(f.value - direct / cfg.a) <= 1e-9);
}

TEST_CASE("inequity series matches both direct oracles") {
  const PizzaConfig cfg(0.7, 0.5, 3);
  const SeriesResult g = inequity_series(cfg);
  REQUIRE(std::abs(g.value - inequity_direct(cfg, DirectMethod::closed_form)) <=
          g.truncation_bound + 1e-9);
  REQUIRE(std::abs(g.value - inequity_direct(cfg, DirectMethod::quadrature)) <=
          g.truncation_bound + 1e-9);

  for (double a : {0.2, 0.5, 0.8}) {
    for (int n : {3, 5}) {
      for (int i = 0; i < 8; ++i) {
        const PizzaConfig c(two_pi * i / 8.0, a, n);
        const SeriesResult gs = inequity_series(c);
        const double tol = gs.truncation_bound + 1e-9;
        REQUIRE(std::abs(gs.value - inequity_direct(c, DirectMethod::closed_form)) <= tol);
        REQUIRE(std::abs(gs.value - inequity_direct(c, DirectMethod::quadrature)) <= tol);
      }
    }
  }
}

TEST_CASE("series symmetries") {
  std::mt19937 rng(89);
  std::uniform_real_distribution<double> angle(0.0, two_pi);
  std::uniform_real_distribution<double> offset(0.05, 0.95);
  std::uniform_int_distribution<int> pick(0, 2);
  const int ns[3] = {3, 5, 7};
  for (int t = 0; t < 20; ++t) {
    const double alpha = angle(rng);
    const double a = offset(rng);
    const int n = ns[pick(rng)];

    const SeriesResult f = reduced_inequity_series(PizzaConfig(alpha, a, n));
    const SeriesResult f_neg = reduced_inequity_series(PizzaConfig(-alpha, a, n));
    REQUIRE(std::abs(f_neg.value + f.value) <=
            f.truncation_bound + f_neg.truncation_bound);

    const SeriesResult f_per = reduced_inequity_series(PizzaConfig(alpha + two_pi / n, a, n));
    REQUIRE(std::abs(f_per.value - f.value) <=
            f.truncation_bound + f_per.truncation_bound);

    const SeriesResult g = inequity_series(PizzaConfig(alpha, a, n));
    const SeriesResult g_flip = inequity_series(PizzaConfig(alpha + kPi / n, a, n));
    REQUIRE(std::abs(g_flip.value + g.value) <=
            g.truncation_bound + g_flip.truncation_bound);
  }
}
