#pragma once

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pizza/bounds.hpp"
#include "pizza/format.hpp"
#include "pizza/fourier.hpp"
#include "pizza/geometry.hpp"

namespace pizza {

struct SweepSpec {
  enum class Parameter { alpha, offset };

  Parameter parameter = Parameter::alpha;
  double start = 0.0;
  double stop = 0.0;
  long steps = 2;      // number of rows; endpoints included
  double alpha = 0.0;  // fixed value when sweeping the offset
  double a = 0.5;      // fixed value when sweeping alpha
  int n = 3;
  std::string output_path;
  TruncationPolicy policy;
};

struct SweepRow {
  double alpha = 0.0;
  double a = 0.0;
  int n = 0;
  double g_series = 0.0;
  double g_direct = 0.0;
  double trunc_bound = 0.0;
  double abs_diff = 0.0;
  double bound_g = 0.0;
};

inline void validate(const SweepSpec& spec) {
  if (spec.steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
  if (!(spec.start < spec.stop)) throw std::invalid_argument("sweep: start must be < stop");
  require_odd_n(spec.n);
  if (spec.parameter == SweepSpec::Parameter::alpha) {
    if (spec.start < 0.0 || spec.stop >= two_pi)
      throw std::invalid_argument("sweep: alpha range must stay inside [0, 2 pi)");
    if (!(spec.a > 0.0) || spec.a >= 1.0)
      throw InvalidOffset("sweep: fixed offset must lie in (0, 1)");
  } else {
    if (!(spec.start > 0.0) || spec.stop >= 1.0)
      throw InvalidOffset("sweep: offset range must stay inside (0, 1)");
    if (spec.alpha < 0.0 || spec.alpha >= two_pi)
      throw std::invalid_argument("sweep: fixed alpha must lie in [0, 2 pi)");
  }
}

inline std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  validate(spec);
  std::vector<SweepRow> rows;
  rows.reserve(spec.steps);
  const bool sweeping_alpha = spec.parameter == SweepSpec::Parameter::alpha;
  for (long i = 0; i < spec.steps; ++i) {
    const double x = spec.start + (spec.stop - spec.start) *
                                      (static_cast<double>(i) /
                                       static_cast<double>(spec.steps - 1));
    const double alpha = sweeping_alpha ? x : spec.alpha;
    const double a = sweeping_alpha ? spec.a : x;
    try {
      const PizzaConfig cfg(alpha, a, spec.n);
      const SeriesResult g = inequity_series(cfg, spec.policy);
      const double direct = inequity_direct(cfg, DirectMethod::closed_form);
      rows.push_back({alpha, a, spec.n, g.value, direct, g.truncation_bound,
                      std::abs(g.value - direct), inequity_bound(a, spec.n)});
    } catch (const std::exception& e) {
      throw std::runtime_error("sweep row " + std::to_string(i) +
                               " (alpha=" + g17(alpha) + ", a=" + g17(a) +
                               "): " + e.what());
    }
  }
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string csv = "alpha,a,n,g_series,g_direct,trunc_bound,abs_diff,bound_g\n";
  for (const SweepRow& row : rows) {
    csv += g17(row.alpha);
    csv += ',';
    csv += g17(row.a);
    csv += ',';
    csv += std::to_string(row.n);
    csv += ',';
    csv += g17(row.g_series);
    csv += ',';
    csv += g17(row.g_direct);
    csv += ',';
    csv += g17(row.trunc_bound);
    csv += ',';
    csv += g17(row.abs_diff);
    csv += ',';
    csv += g17(row.bound_g);
    csv += '\n';
  }
  return csv;
}

inline void write_sweep_csv(const SweepSpec& spec) {
  const std::string csv = sweep_csv(run_sweep(spec));
  std::ofstream out(spec.output_path, std::ios::binary);
  if (!out) throw std::runtime_error("sweep: cannot open " + spec.output_path);
  out << csv;
  out.flush();
  if (!out) throw std::runtime_error("sweep: write failed for " + spec.output_path);
}

}  // namespace pizza
