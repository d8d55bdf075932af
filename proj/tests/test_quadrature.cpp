#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "pizza/quadrature.hpp"

using pizza::integrate;
using pizza::NonConvergence;
using pizza::QuadratureRequest;
using pizza::QuadratureResult;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent oracle: composite Simpson on a fixed fine grid. Slow and
// deliberately unrelated to the adaptive code path it cross-checks.
template <typename F>
double simpson_oracle(const F& f, double lo, double hi, int panels = 1 << 18) {
  const double h = (hi - lo) / panels;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < panels; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(lo + i * h);
  return sum * h / 3.0;
}

QuadratureRequest request(std::function<double(double)> f, double lo, double hi,
                          double tol = 1e-12) {
  QuadratureRequest req;
  req.integrand = std::move(f);
  req.lower = lo;
  req.upper = hi;
  req.abs_tol = tol;
  return req;
}

}  // namespace

TEST_CASE("constant integrand over a full period") {
  const QuadratureResult r = integrate(request([](double) { return 1.0; }, 0.0, 2.0 * kPi));
  REQUIRE(std::abs(r.value - 2.0 * kPi) <= 1e-12);
  REQUIRE(r.error_estimate >= 0.0);
  REQUIRE(r.error_estimate <= 1e-12);
}

TEST_CASE("full-period sine integrates to zero") {
  const QuadratureResult r =
      integrate(request([](double t) { return std::sin(t); }, 0.0, 2.0 * kPi));
  REQUIRE(std::abs(r.value) <= 1e-12);
}

TEST_CASE("cos(t) cos(3t) sin^2(t) over a full period") {
  // Expanding to Fourier monomials: cos t cos 3t = (cos 2t + cos 4t)/2 and
  // sin^2 t = (1 - cos 2t)/2, so the product integrates term by term to
  // -(1/4) * integral of cos^2 2t = -pi/4.
  auto f = [](double t) {
    const double s = std::sin(t);
    return std::cos(t) * std::cos(3.0 * t) * s * s;
  };
  const QuadratureResult r = integrate(request(f, 0.0, 2.0 * kPi));
  REQUIRE(std::abs(r.value - (-kPi / 4.0)) <= 1e-12);
  REQUIRE(std::abs(r.value - simpson_oracle(f, 0.0, 2.0 * kPi)) <= 1e-9);
}

TEST_CASE("agrees with the Simpson oracle on assorted smooth integrands") {
  auto f1 = [](double t) { return std::exp(std::cos(t)); };
  auto f2 = [](double t) { return std::sqrt(1.0 - 0.25 * std::sin(t) * std::sin(t)); };
  auto f3 = [](double t) { return std::sin(7.0 * t) * std::exp(-t * t / 3.0); };
  REQUIRE(std::abs(integrate(request(f1, 0.0, 5.0)).value - simpson_oracle(f1, 0.0, 5.0)) <= 1e-9);
  REQUIRE(std::abs(integrate(request(f2, -1.0, 4.0)).value - simpson_oracle(f2, -1.0, 4.0)) <= 1e-9);
  REQUIRE(std::abs(integrate(request(f3, 0.0, 3.0)).value - simpson_oracle(f3, 0.0, 3.0)) <= 1e-9);
}

TEST_CASE("linearity on random polynomial pairs") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> p(7), q(7);
    for (double& c : p) c = coeff(rng);
    for (double& c : q) c = coeff(rng);
    auto eval = [](const std::vector<double>& cs, double t) {
      double v = 0.0;
      for (auto it = cs.rbegin(); it != cs.rend(); ++it) v = v * t + *it;
      return v;
    };
    auto fp = [&](double t) { return eval(p, t); };
    auto fq = [&](double t) { return eval(q, t); };
    auto fsum = [&](double t) { return eval(p, t) + eval(q, t); };
    const double tol = 1e-12;
    const double lhs = integrate(request(fsum, -1.0, 2.0, tol)).value;
    const double rhs = integrate(request(fp, -1.0, 2.0, tol)).value +
                       integrate(request(fq, -1.0, 2.0, tol)).value;
    REQUIRE(std::abs(lhs - rhs) <= 2.0 * tol);
  }
}

TEST_CASE("interval additivity") {
  auto f = [](double t) { return std::exp(std::cos(3.0 * t)) + t; };
  const double tol = 1e-12;
  const double whole = integrate(request(f, 0.0, 5.0, tol)).value;
  const double split = integrate(request(f, 0.0, 1.7, tol)).value +
                       integrate(request(f, 1.7, 5.0, tol)).value;
  REQUIRE(std::abs(whole - split) <= 2.0 * tol);
}

TEST_CASE("polynomials integrate to machine-level error") {
  // Degree 13 is within the exactness degree of both embedded rules, so a
  // single panel already nails it.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> cs(14);
    for (double& c : cs) c = coeff(rng);
    auto f = [&](double t) {
      double v = 0.0;
      for (auto it = cs.rbegin(); it != cs.rend(); ++it) v = v * t + *it;
      return v;
    };
    double exact = 0.0;
    const double lo = -1.0, hi = 1.5;
    for (std::size_t k = 0; k < cs.size(); ++k)
      exact += cs[k] / double(k + 1) *
               (std::pow(hi, double(k + 1)) - std::pow(lo, double(k + 1)));
    const QuadratureResult r = integrate(request(f, lo, hi, 1e-12));
    REQUIRE(std::abs(r.value - exact) <= 1e-13);
  }
}

TEST_CASE("identical requests reproduce bit for bit") {
  auto f = [](double t) { return std::sin(17.0 * t) / (2.0 + std::cos(t)); };
  const QuadratureResult a = integrate(request(f, 0.0, 2.0 * kPi, 1e-12));
  const QuadratureResult b = integrate(request(f, 0.0, 2.0 * kPi, 1e-12));
  REQUIRE(a.value == b.value);
  REQUIRE(a.error_estimate == b.error_estimate);
  REQUIRE(a.subdivisions == b.subdivisions);
}

TEST_CASE("oscillatory integrand converges with subdivisions") {
  // 40 full periods integrate to zero; the phase breaks the midpoint symmetry
  // that would otherwise cancel the rule exactly on a single panel.
  const QuadratureResult r = integrate(
      request([](double t) { return std::sin(40.0 * t + 0.7); }, 0.0, 2.0 * kPi));
  REQUIRE(std::abs(r.value) <= 1e-12);
  REQUIRE(r.subdivisions > 0);
}

TEST_CASE("evaluation budget exhaustion raises NonConvergence") {
  QuadratureRequest req =
      request([](double t) { return std::cos(5000.0 * t * t); }, 0.0, 10.0, 1e-13);
  req.max_evaluations = 3000;
  REQUIRE_THROWS_AS(integrate(req), NonConvergence);
}

TEST_CASE("invalid requests are rejected") {
  REQUIRE_THROWS_AS(integrate(request([](double) { return 1.0; }, 1.0, 0.0)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(integrate(request([](double) { return 1.0; }, 0.0, 1.0, 0.0)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(integrate(request([](double) { return 1.0; }, 0.0, 1.0, -1e-9)),
                    std::invalid_argument);
  QuadratureRequest empty;
  empty.lower = 0.0;
  empty.upper = 1.0;
  REQUIRE_THROWS_AS(integrate(empty), std::invalid_argument);
}

TEST_CASE("empty interval gives zero without evaluations") {
  const QuadratureResult r = integrate(request([](double) { return 123.0; }, 2.0, 2.0));
  REQUIRE(r.value == 0.0);
  REQUIRE(r.error_estimate == 0.0);
  REQUIRE(r.subdivisions == 0);
}

TEST_CASE("error estimate stays within the requested tolerance") {
  for (double tol : {1e-8, 1e-10, 1e-12, 1e-14}) {
    const QuadratureResult r = integrate(
        request([](double t) { return std::exp(std::sin(2.0 * t)); }, 0.0, 2.0 * kPi, tol));
    REQUIRE(r.error_estimate <= tol);
  }
}
