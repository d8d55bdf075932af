#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pizza/errors.hpp"
#include "pizza/quadrature.hpp"

namespace pizza {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline void require_odd_n(int n) {
  if (n == 1) throw NEqualsOne("half-slice count n must be greater than 1");
  if (n < 1 || n % 2 == 0) throw EvenN("half-slice count n must be odd");
}

// Slicing geometry: unit circle centered at (a, 0), cut point at the origin,
// 2n rays at angles alpha + k pi/n. Slice k (1-based, counterclockwise) spans
// [alpha + (k-1) pi/n, alpha + k pi/n]; odd-numbered slices form the set B,
// even-numbered slices the set A.
struct PizzaConfig {
  double alpha;  // first ray angle, normalized to [0, 2 pi)
  double a;      // cut point to center distance; unit radius, so 0 <= a < 1
  int n;         // half the slice count; geometry accepts any n >= 1

  PizzaConfig(double alpha_, double a_, int n_) : alpha(alpha_), a(a_), n(n_) {
    if (!std::isfinite(alpha) || !std::isfinite(a))
      throw std::invalid_argument("PizzaConfig: parameters must be finite");
    if (a < 0.0 || a >= 1.0)
      throw InvalidOffset("PizzaConfig: offset must lie in [0, 1)");
    if (n < 1) throw std::invalid_argument("PizzaConfig: n must be >= 1");
    alpha = std::fmod(alpha, two_pi);
    if (alpha < 0.0) alpha += two_pi;
    if (alpha >= two_pi) alpha = 0.0;  // fmod seam
  }

  // Bounding rays of slice k, in raw (unreduced) radians.
  double slice_lower(int k) const { return alpha + (k - 1) * std::numbers::pi / n; }
  double slice_upper(int k) const { return alpha + k * std::numbers::pi / n; }
};

namespace detail {

inline void require_slice_index(const PizzaConfig& cfg, int k) {
  if (k < 1 || k > 2 * cfg.n)
    throw std::invalid_argument("slice index must lie in 1..2n");
}

}  // namespace detail

/// Distance from the cut point to the circle boundary along direction theta.
inline double radius(double theta, double a) {
  if (a < 0.0 || a >= 1.0) throw InvalidOffset("radius: offset must lie in [0, 1)");
  const double s = std::sin(theta);
  return a * std::cos(theta) + std::sqrt(1.0 - a * a * s * s);
}

// Antiderivative of radius(theta, a)^2. asin never needs unwrapping:
// |a sin(theta)| <= a < 1 keeps it on the principal branch everywhere.
inline double radius_squared_antiderivative(double theta, double a) {
  if (a < 0.0 || a >= 1.0)
    throw InvalidOffset("radius_squared_antiderivative: offset must lie in [0, 1)");
  const double s = std::sin(theta);
  const double root = std::sqrt(1.0 - a * a * s * s);
  return theta + 0.5 * a * a * std::sin(2.0 * theta) + a * s * root + std::asin(a * s);
}

inline double slice_area_closed_form(const PizzaConfig& cfg, int k) {
  detail::require_slice_index(cfg, k);
  return 0.5 * (radius_squared_antiderivative(cfg.slice_upper(k), cfg.a) -
                radius_squared_antiderivative(cfg.slice_lower(k), cfg.a));
}

inline double slice_area_quadrature(const PizzaConfig& cfg, int k, double abs_tol = 1e-12) {
  detail::require_slice_index(cfg, k);
  const double a = cfg.a;
  QuadratureRequest req;
  req.integrand = [a](double theta) {
    const double r = radius(theta, a);
    return r * r;
  };
  req.lower = cfg.slice_lower(k);
  req.upper = cfg.slice_upper(k);
  req.abs_tol = abs_tol;
  return 0.5 * integrate(req).value;
}

enum class DirectMethod { quadrature, closed_form };

struct SliceAreaReport {
  std::vector<double> areas;  // slice k at index k-1
  double even_total = 0.0;
  double odd_total = 0.0;
  double inequity = 0.0;  // even_total - odd_total
};

inline SliceAreaReport slice_report(const PizzaConfig& cfg, DirectMethod method,
                                    double abs_tol = 1e-12) {
  SliceAreaReport report;
  report.areas.reserve(2 * cfg.n);
  for (int k = 1; k <= 2 * cfg.n; ++k) {
    const double area = method == DirectMethod::quadrature
                            ? slice_area_quadrature(cfg, k, abs_tol)
                            : slice_area_closed_form(cfg, k);
    report.areas.push_back(area);
    (k % 2 == 0 ? report.even_total : report.odd_total) += area;
  }
  report.inequity = report.even_total - report.odd_total;
  return report;
}

/// Even-slice total minus odd-slice total, computed slice by slice.
inline double inequity_direct(const PizzaConfig& cfg, DirectMethod method,
                              double abs_tol = 1e-12) {
  return slice_report(cfg, method, abs_tol).inequity;
}

// +1 on even-numbered angular intervals, -1 on odd-numbered ones; values at
// interval endpoints follow the interval to their right.
inline int step_function(double theta, const PizzaConfig& cfg) {
  double t = std::fmod(theta - cfg.alpha, two_pi);
  if (t < 0.0) t += two_pi;
  int idx = static_cast<int>(t * cfg.n / std::numbers::pi);
  if (idx >= 2 * cfg.n) idx = 0;
  return idx % 2 == 0 ? -1 : +1;
}

// Integral of step_function(theta) e^{-i m theta} over a full period, summed
// interval by interval with the exact antiderivative of e^{-i m theta} rather
// than adaptive quadrature across the jumps.
inline std::complex<double> step_fourier_coefficient_numeric(long m, const PizzaConfig& cfg) {
  require_odd_n(cfg.n);
  if (m == 0) throw ZeroFrequency("step_fourier_coefficient: frequency must be nonzero");
  const std::complex<double> minus_im(0.0, -static_cast<double>(m));
  std::complex<double> total = 0.0;
  for (int k = 0; k < 2 * cfg.n; ++k) {
    const double lo = cfg.alpha + k * std::numbers::pi / cfg.n;
    const double hi = lo + std::numbers::pi / cfg.n;
    const std::complex<double> piece =
        (std::exp(minus_im * hi) - std::exp(minus_im * lo)) / minus_im;
    total += (k % 2 == 0 ? -1.0 : 1.0) * piece;  // slice k+1: odd slices carry -1
  }
  return total;
}

// Closed form of the same integral: zero unless m is an odd multiple of n, in
// which case it equals (4n/m) i e^{-i m alpha}.
inline std::complex<double> step_fourier_coefficient_closed_form(long m, const PizzaConfig& cfg) {
  require_odd_n(cfg.n);
  if (m == 0) throw ZeroFrequency("step_fourier_coefficient: frequency must be nonzero");
  if (m % cfg.n != 0 || (m / cfg.n) % 2 == 0) return 0.0;
  const std::complex<double> i(0.0, 1.0);
  return (4.0 * cfg.n / static_cast<double>(m)) * i *
         std::exp(-i * (static_cast<double>(m) * cfg.alpha));
}

}  // namespace pizza
