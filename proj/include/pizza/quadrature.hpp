#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pizza/errors.hpp"
#include "pizza/kahan.hpp"

namespace pizza {

struct QuadratureRequest {
  std::function<double(double)> integrand;
  double lower = 0.0;
  double upper = 0.0;
  double abs_tol = 1e-12;
  std::int64_t max_evaluations = 1'000'000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // sum of per-panel estimates; <= abs_tol on success
  std::int64_t subdivisions = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule, standard tabulated
// abscissae and weights. The Gauss points are the odd-indexed Kronrod nodes.
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kGk15Weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGauss7Weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double value = 0.0;
  double error = 0.0;
};

template <typename F>
Panel evaluate_gk15(const F& f, double lo, double hi) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (lo + hi);

  const double fc = f(mid);
  double kronrod = kGk15Weights[7] * fc;
  double gauss = kGauss7Weights[3] * fc;
  double resabs = kGk15Weights[7] * std::abs(fc);
  double samples[7][2];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGk15Nodes[i];
    const double f1 = f(mid - dx);
    const double f2 = f(mid + dx);
    samples[i][0] = f1;
    samples[i][1] = f2;
    kronrod += kGk15Weights[i] * (f1 + f2);
    resabs += kGk15Weights[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) gauss += kGauss7Weights[i / 2] * (f1 + f2);
  }

  const double mean = 0.5 * kronrod;
  double resasc = kGk15Weights[7] * std::abs(fc - mean);
  for (int i = 0; i < 7; ++i)
    resasc += kGk15Weights[i] *
              (std::abs(samples[i][0] - mean) + std::abs(samples[i][1] - mean));
  resabs *= half;
  resasc *= half;

  double err = std::abs((kronrod - gauss) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  err = std::max(err, std::numeric_limits<double>::epsilon() * resabs);
  return {kronrod * half, err};
}

}  // namespace detail

// Adaptive bisection over an explicit stack, always descending into the left
// half first, so identical requests reproduce bit-for-bit.
inline QuadratureResult integrate(const QuadratureRequest& req) {
  if (!req.integrand) throw std::invalid_argument("integrate: missing integrand");
  if (!(req.lower <= req.upper)) throw std::invalid_argument("integrate: lower > upper");
  if (!(req.abs_tol > 0.0)) throw std::invalid_argument("integrate: abs_tol must be positive");
  if (req.lower == req.upper) return {};

  const double total_width = req.upper - req.lower;
  std::int64_t evaluations = 0;
  QuadratureResult out;
  KahanAccumulator<double> value;
  KahanAccumulator<double> error;

  std::vector<std::pair<double, double>> pending;
  pending.emplace_back(req.lower, req.upper);
  while (!pending.empty()) {
    const auto [lo, hi] = pending.back();
    pending.pop_back();
    if (evaluations + 15 > req.max_evaluations)
      throw NonConvergence("integrate: evaluation budget exhausted");
    const detail::Panel panel = detail::evaluate_gk15(req.integrand, lo, hi);
    evaluations += 15;
    const double allowance = req.abs_tol * ((hi - lo) / total_width);
    const double mid = 0.5 * (lo + hi);
    if (panel.error <= allowance) {
      value += panel.value;
      error += panel.error;
    } else if (!(lo < mid && mid < hi)) {
      throw NonConvergence("integrate: interval underflow before reaching tolerance");
    } else {
      pending.emplace_back(mid, hi);
      pending.emplace_back(lo, mid);
      ++out.subdivisions;
    }
  }
  out.value = value.value();
  out.error_estimate = error.value();
  return out;
}

}  // namespace pizza
