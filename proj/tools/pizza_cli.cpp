// Command-line front end: evaluate the even/odd slice-area inequity of a
// circular pizza cut by 2n rays through an off-center point, print series
// coefficients and extremum reports, emit CSV sweeps, and run the numerical
// cross-check suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "pizza/pizza.hpp"

namespace {

constexpr double kDegree = std::numbers::pi / 180.0;

void print_coefficient_table(long m, long j_max) {
  pizza::detail::require_frequency(m);
  if (j_max < 1) throw std::invalid_argument("--j-max must be >= 1");
  std::printf("# coefficients of a^{2j} for frequency m = %ld (rational multiple of pi)\n", m);
  std::printf("%4s  %4s  %-22s  %-24s  %-5s  %s\n", "j", "2j", "pi multiple", "value",
              "sign", "leading");
  for (long j = 1; j <= j_max; ++j) {
    const pizza::CoefficientValue c = pizza::coefficient_closed_form({m, j});
    std::ostringstream rational;
    rational << c.pi_multiple;
    std::printf("%4ld  %4ld  %-22s  %-24s  %+d     %s\n", j, 2 * j,
                rational.str().c_str(), pizza::g17(c.value).c_str(), c.sign,
                c.is_leading ? "*" : "");
  }
}

int run_inequity(double alpha, double a, int n, const std::string& method,
                 const pizza::TruncationPolicy& policy) {
  const pizza::PizzaConfig cfg(alpha, a, n);
  std::printf("alpha = %s  a = %s  n = %d\n", pizza::g17(cfg.alpha).c_str(),
              pizza::g17(cfg.a).c_str(), cfg.n);
  if (method == "series" || method == "all") {
    const pizza::SeriesResult g = pizza::inequity_series(cfg, policy);
    std::printf("g_series      = %s  (truncation bound %s, %ld frequencies, %ld terms)\n",
                pizza::g17(g.value).c_str(), pizza::g17(g.truncation_bound).c_str(),
                g.terms_used.m_terms, g.terms_used.j_terms);
    if (method == "all") {
      const double quad = pizza::inequity_direct(cfg, pizza::DirectMethod::quadrature);
      const double closed = pizza::inequity_direct(cfg, pizza::DirectMethod::closed_form);
      std::printf("g_quadrature  = %s\n", pizza::g17(quad).c_str());
      std::printf("g_closed_form = %s\n", pizza::g17(closed).c_str());
      std::printf("|series - quadrature|      = %s\n",
                  pizza::g17(std::abs(g.value - quad)).c_str());
      std::printf("|series - closed_form|     = %s\n",
                  pizza::g17(std::abs(g.value - closed)).c_str());
      std::printf("|quadrature - closed_form| = %s\n",
                  pizza::g17(std::abs(quad - closed)).c_str());
    }
  } else if (method == "quadrature") {
    std::printf("g_quadrature  = %s\n",
                pizza::g17(pizza::inequity_direct(cfg, pizza::DirectMethod::quadrature)).c_str());
  } else {
    std::printf("g_closed_form = %s\n",
                pizza::g17(pizza::inequity_direct(cfg, pizza::DirectMethod::closed_form)).c_str());
  }
  return 0;
}

int run_extremum(double a, int n, const pizza::TruncationPolicy& policy) {
  const pizza::ExtremumReport report = pizza::extremum(a, n, policy);
  std::printf("a = %s  n = %d\n", pizza::g17(a).c_str(), n);
  std::printf("M_a (max of |g|/a over alpha) = %s  (truncation bound %s)\n",
              pizza::g17(report.max_value.value).c_str(),
              pizza::g17(report.max_value.truncation_bound).c_str());
  std::printf("argmax alpha  = %s  (pi/(2n))\n", pizza::g17(report.argmax_alpha).c_str());
  std::printf("sign at argmax = %+d\n", report.sign_at_argmax);
  std::printf("M_a bound     = %s\n", pizza::g17(report.max_value_bound).c_str());
  std::printf("|g| bound     = %s\n", pizza::g17(report.inequity_bound).c_str());
  const bool ok = report.max_value.value < report.max_value_bound;
  std::printf("M_a < bound   : %s\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}

int run_verify(const std::string& level, double tamper) {
  pizza::verify::Options opts;
  opts.level = level == "full" ? pizza::verify::Level::full : pizza::verify::Level::quick;
  opts.coefficient_tamper = tamper;
  const pizza::verify::Report report = pizza::verify::run(opts);
  std::fputs(pizza::verify::summarize(report).c_str(), stdout);
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"even/odd slice-area inequity for an off-center pizza cut"};
  app.require_subcommand(1);

  long m = 3;
  long j_max = 8;
  double alpha = 0.0;
  double a = 0.5;
  int n = 3;
  double tol = 1e-12;
  bool degrees = false;
  std::string method = "all";
  std::string param = "alpha";
  std::string level = "quick";
  std::string out_path;
  double start = 0.0;
  double stop = 0.0;
  long steps = 64;
  double tamper = 0.0;

  CLI::App* coeff = app.add_subcommand("coeff", "print closed-form series coefficients");
  coeff->add_option("--m", m, "frequency (odd, >= 3)")->required();
  coeff->add_option("--j-max", j_max, "largest power index to print");

  CLI::App* inequity = app.add_subcommand("inequity", "evaluate the inequity at one configuration");
  inequity->add_option("--alpha", alpha, "first ray angle")->required();
  inequity->add_option("--a", a, "cut point offset")->required();
  inequity->add_option("--n", n, "half the slice count")->required();
  inequity->add_option("--method", method, "series | quadrature | closed_form | all")
      ->check(CLI::IsMember({"series", "quadrature", "closed_form", "all"}));
  inequity->add_option("--tol", tol, "series truncation target");
  inequity->add_flag("--degrees", degrees, "angles are given in degrees");

  CLI::App* extremum = app.add_subcommand("extremum", "maximum inequity over the first-ray angle");
  extremum->add_option("--a", a, "cut point offset")->required();
  extremum->add_option("--n", n, "half the slice count (odd, > 1)")->required();
  extremum->add_option("--tol", tol, "series truncation target");

  CLI::App* bound = app.add_subcommand("bound", "extremum and headline bound report");
  bound->add_option("--a", a, "cut point offset")->required();
  bound->add_option("--n", n, "half the slice count (odd, > 1)")->required();
  bound->add_option("--tol", tol, "series truncation target");

  CLI::App* sweep = app.add_subcommand("sweep", "write a CSV over a parameter range");
  sweep->add_option("--param", param, "swept parameter: alpha | a")
      ->check(CLI::IsMember({"alpha", "a"}));
  sweep->add_option("--start", start, "range start")->required();
  sweep->add_option("--stop", stop, "range stop")->required();
  sweep->add_option("--steps", steps, "number of rows (>= 2)");
  sweep->add_option("--alpha", alpha, "fixed alpha when sweeping a");
  sweep->add_option("--a", a, "fixed offset when sweeping alpha");
  sweep->add_option("--n", n, "half the slice count (odd, > 1)")->required();
  sweep->add_option("--out", out_path, "output CSV path")->required();
  sweep->add_option("--tol", tol, "series truncation target");
  sweep->add_flag("--degrees", degrees, "angles are given in degrees");

  CLI::App* verify = app.add_subcommand("verify", "run the numerical cross-check suites");
  verify->add_option("--level", level, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--tamper-coefficient", tamper)->group("");  // test hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    pizza::TruncationPolicy policy;
    policy.target_abs_error = tol;
    if (coeff->parsed()) {
      print_coefficient_table(m, j_max);
      return 0;
    }
    if (inequity->parsed()) {
      if (degrees) alpha *= kDegree;
      return run_inequity(alpha, a, n, method, policy);
    }
    if (extremum->parsed() || bound->parsed()) {
      return run_extremum(a, n, policy);
    }
    if (sweep->parsed()) {
      pizza::SweepSpec spec;
      spec.parameter = param == "alpha" ? pizza::SweepSpec::Parameter::alpha
                                        : pizza::SweepSpec::Parameter::offset;
      if (degrees) {
        alpha *= kDegree;
        if (spec.parameter == pizza::SweepSpec::Parameter::alpha) {
          start *= kDegree;
          stop *= kDegree;
        }
      }
      spec.start = start;
      spec.stop = stop;
      spec.steps = steps;
      spec.alpha = alpha;
      spec.a = a;
      spec.n = n;
      spec.output_path = out_path;
      spec.policy = policy;
      pizza::write_sweep_csv(spec);
      return 0;
    }
    if (verify->parsed()) {
      return run_verify(level, tamper);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
