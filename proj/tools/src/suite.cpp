#include "pararadon_tools/suite.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>

#include "pararadon/parallel.hpp"
#include "pararadon/special.hpp"

namespace pararadon::tools {

namespace {

std::mutex slope_mutex;

ResidualReport renamed(ResidualReport r, const std::string& suffix) {
  r.name += suffix;
  return r;
}

ResidualReport scalar_report(std::string name, const GridSpec& grid, double error,
                             double tolerance, std::string detail) {
  ResidualReport r;
  r.name = std::move(name);
  r.grid = grid;
  r.max_abs = error;
  r.rel_l2 = error;
  r.tolerance = tolerance;
  r.detail = std::move(detail);
  finalize(r);
  return r;
}

// uniform in the disk |z| <= 3
FracOrder random_order(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = 3.0 * std::sqrt(u(rng));
  const double t = 2.0 * kPi * u(rng);
  return {r * std::cos(t), r * std::sin(t)};
}

std::string num(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

void plan_symbols(const SuiteConfig& c, std::vector<PlannedCheck>& out, bool random) {
  const GridSpec g = c.grid;
  const double tol = c.tolerances.paths.symbol;
  const char* suite = random ? "multipliers" : "identities";
  auto add = [&](std::function<ResidualReport()> f) { out.push_back({suite, std::move(f)}); };
  if (!random) {
    std::vector<FracOrder> orders = c.alphas;
    orders.insert(orders.begin(), FracOrder{});
    for (FracOrder a : orders) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        add([=] { return check_multiplier_product(g, a, a, s, tol); });
        add([=] { return check_symbol_ladder(g, a, 1, s, tol); });
      }
    }
    return;
  }
  std::mt19937_64 rng(c.seed);
  for (int k = 0; k < c.random_pairs; ++k) {
    const FracOrder a = random_order(rng);
    const FracOrder b = random_order(rng);
    const int ell = 1 + k % 3;
    const std::string tag = "#" + std::to_string(k);
    for (Sign s : {Sign::plus, Sign::minus}) {
      add([=] { return renamed(check_multiplier_product(g, a, b, s, tol), tag); });
      add([=] { return renamed(check_symbol_ladder(g, a, ell, s, tol), tag); });
      add([=] { return renamed(check_symbol_semigroup(g, a, b, s, tol), tag); });
    }
  }
}

void plan_identities(const SuiteConfig& c, std::vector<PlannedCheck>& out) {
  auto add = [&](std::function<ResidualReport()> f) { out.push_back({"identities", std::move(f)}); };
  const Tolerances& t = c.tolerances.paths;
  const GridSpec g = c.grid;
  const int n = c.dim;
  const SingularPolicy policy = c.policy;

  plan_symbols(c, out, false);

  for (std::size_t i = 0; i < c.functions.size(); ++i) {
    if (!c.functions[i].phi_class()) continue;
    const TestFunction f = c.functions[i].build(n);
    const std::string tag = "@f" + std::to_string(i);
    for (Sign s : {Sign::plus, Sign::minus}) {
      add([=] { return renamed(check_unitary(f, 0.0, s, g, policy, t.same_fft), tag); });
    }
    add([=] { return renamed(check_unitary(f, 1.0, Sign::plus, g, policy, t.same_fft), tag); });
    std::vector<FracOrder> orders = c.alphas;
    orders.insert(orders.begin(), FracOrder{});
    for (FracOrder a : orders) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        add([=] { return renamed(check_composition_riesz(f, a, s, g, policy, t.same_fft), tag); });
      }
    }
  }

  // the quadrature checks are sized for the plane
  if (n != 2) return;
  const auto gauss = std::find_if(c.functions.begin(), c.functions.end(),
                                  [](const FunctionSpec& f) { return !f.phi_class(); });
  const auto phi = std::find_if(c.functions.begin(), c.functions.end(),
                                [](const FunctionSpec& f) { return f.phi_class(); });
  std::vector<FracOrder> positive;
  for (FracOrder a : c.alphas) {
    if (a.re() > 0.0) positive.push_back(a);
  }
  if (gauss != c.functions.end()) {
    const TestFunction f = gauss->build(n);
    const std::string tag = "@f" + std::to_string(gauss - c.functions.begin());
    const TestFunction pairing_partner = TestFunction::unit_gaussian(n);
    const ColumnGrids columns = ColumnGrids::standard(n);
    const GridSpec pairing_grid = GridSpec::cube(n, 6.0, 48);
    for (FracOrder a : positive) {
      add([=] {
        return renamed(check_duality(f, pairing_partner, a, Sign::plus, pairing_grid, {},
                                     t.quad_quad),
                       tag);
      });
      add([=] { return renamed(check_factorization(f, a, Sign::plus, columns, {}, t.quad_quad), tag); });
      add([=] {
        return renamed(conjugation_residual(f, a, Sign::plus, Grid(GridSpec::cube(n, 2.0, 16)), {},
                                            c.tolerances.conjugation),
                       tag);
      });
      for (FracOrder b : positive) {
        add([=] {
          return renamed(check_semigroup(f, a, b, Sign::plus, columns, {}, t.quad_quad), tag);
        });
      }
    }
    const std::vector<double> seq{0.4, 0.2, 0.1, 0.05};
    const GridSpec limit_grid = GridSpec::cube(n, 4.0, 32);
    for (bool dual : {false, true}) {
      add([=] {
        return renamed(check_limit_alpha_zero(f, seq, Sign::plus, dual, limit_grid, {},
                                              c.tolerances.limit),
                       tag);
      });
    }
  }
  if (phi != c.functions.end()) {
    const TestFunction f = phi->build(n);
    const std::string tag = "@f" + std::to_string(phi - c.functions.begin());
    add([=] {
      return renamed(check_derivative_ladder(f, 1.5, 1, Sign::plus, g, {}, t.quad_spectral), tag);
    });
  }
}

void plan_norms(const SuiteConfig& c, std::vector<PlannedCheck>& out,
                std::vector<SlopeReport>* slopes) {
  auto add = [&](std::function<ResidualReport()> f) { out.push_back({"norms", std::move(f)}); };
  const int n = c.dim;
  const GridSpec none = GridSpec::cube(n, 1.0, 8);
  const double tol = c.tolerances.paths.symbol;

  // exact exponent bookkeeping at rational orders
  const std::vector<Fraction> rational{{1 - n, 2}, {0, 1}, {1, 2}, {1, 1}};
  for (Fraction a : rational) {
    add([=] {
      const auto inv = admissible_inverse_exponents(a, n);
      const auto e = predicted_slopes_exact(a, inv[0], inv[1], n);
      const double err = std::abs(e[0].value()) + std::abs(e[1].value());
      std::ostringstream d;
      d << "1/p=" << inv[0].num << "/" << inv[0].den << " 1/q=" << inv[1].num << "/" << inv[1].den
        << " slopes " << e[0].num << "/" << e[0].den << ", " << e[1].num << "/" << e[1].den;
      return scalar_report("admissible_exponents[alpha0=" + num(a.value()) + "]", none, err, tol,
                           d.str());
    });
  }
  add([=] {
    const FracOrder lo = alpha_on_strip({cplx(0.0)}, n);
    const FracOrder hi = alpha_on_strip({cplx(1.0)}, n);
    const ExponentPair a = admissible_exponents(lo.re(), n);
    const ExponentPair b = admissible_exponents(hi.re(), n);
    const double err = std::abs(lo.re() - 0.5 * (1 - n)) + std::abs(hi.re() - 1.0) +
                       std::abs(a.p - 2.0) + std::abs(a.q - 2.0) + std::abs(b.p - 1.0) +
                       (std::isinf(b.q) ? 0.0 : 1.0);
    return scalar_report("strip_endpoints", none, err, tol,
                         "alpha(0), alpha(1) and their exponent pairs (2,2), (1,inf)");
  });

  add([=] {
    double worst = 0.0;
    double worst_bound = 0.0;
    for (int k = -8; k <= 8; ++k) {
      const double g = 0.5 * k;
      const double mod2 = std::norm(gamma(cplx(1.0, g)));
      const double ref = g == 0.0 ? 1.0 : kPi * g / std::sinh(kPi * g);
      worst = std::max(worst, std::abs(mod2 - ref) / ref);
      worst_bound = std::max(worst_bound, gamma_modulus_bound(g) / std::exp(0.5 * kPi * std::abs(g)));
    }
    // the bound ratio must stay <= 1; any excess counts as error
    const double err = std::max(worst, worst_bound - 1.0);
    return scalar_report("gamma_modulus", none, std::max(err, 0.0), tol,
                         "|Gamma(1+i g)|^2 vs pi g/sinh(pi g), g in [-4,4]; max 1/|Gamma| e^{-pi|g|/2} = " +
                             num(worst_bound));
  });

  add([=] {
    auto one = [](double) { return 1.0; };
    const double m = interpolation_constant(0.5, one, one);
    return scalar_report("interpolation_constant[M=1]", none, std::abs(m - 1.0), tol,
                         "M_theta = " + num(m));
  });
  add([=] {
    auto m0 = [n](double g) { return std::exp(0.25 * kPi * (1 + n) * std::abs(g)); };
    auto m1 = [n](double g) { return std::exp(0.25 * kPi * (1 + n) * std::abs(g) + 0.1 * g); };
    const double a = interpolation_constant(0.3, m0, m1);
    const double b = interpolation_constant(0.7, m1, m0);
    return scalar_report("interpolation_constant[symmetry]", none, std::abs(a - b) / b,
                         c.tolerances.paths.same_fft, "M_0.3(M0,M1) = " + num(a));
  });

  if (n != 2) return;
  const auto gauss = std::find_if(c.functions.begin(), c.functions.end(),
                                  [](const FunctionSpec& f) { return !f.phi_class(); });
  const TestFunction f =
      gauss != c.functions.end() ? gauss->build(n) : TestFunction::unit_gaussian(n);
  for (double g : {0.0, 0.5, 1.0}) {
    add([=] {
      return l1_linf_bound_check(f, g, Sign::plus, GridSpec::cube(n, 6.0, 48), {},
                                 c.tolerances.l1_linf);
    });
  }

  std::vector<double> orders{0.0};
  for (FracOrder a : c.alphas) {
    if (a.re() > 0.0 && a.re() <= 1.0 &&
        std::find(orders.begin(), orders.end(), a.re()) == orders.end()) {
      orders.push_back(a.re());
    }
  }
  for (double a : orders) {
    add([=] {
      const ExponentPair e = admissible_exponents(a, n);
      SlopeReport rep = scaling_slope_experiment(a, e.p, e.q, default_lambdas());
      ResidualReport r =
          scalar_report("scaling_slopes[alpha=" + num(a) + "]", SlopeSetup{}.out,
                        rep.max_slope_error(), c.tolerances.slope,
                        "fitted (" + num(rep.fitted[0]) + ", " + num(rep.fitted[1]) +
                            ") predicted (" + num(rep.predicted[0]) + ", " +
                            num(rep.predicted[1]) + ")");
      r.seconds = rep.seconds;
      if (slopes) {
        std::lock_guard lock(slope_mutex);
        slopes->push_back(std::move(rep));
      }
      return r;
    });
  }
}

}  // namespace

int SuiteOutcome::failures() const {
  return static_cast<int>(
      std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; }));
}

std::vector<PlannedCheck> plan_checks(const SuiteConfig& config,
                                      std::vector<SlopeReport>* slopes) {
  std::vector<PlannedCheck> out;
  for (SuiteName s : config.suites) {
    switch (s) {
      case SuiteName::identities: plan_identities(config, out); break;
      case SuiteName::norms: plan_norms(config, out, slopes); break;
      case SuiteName::multipliers: plan_symbols(config, out, true); break;
    }
  }
  return out;
}

SuiteOutcome execute_suite(const SuiteConfig& config) {
  SuiteOutcome outcome;
  const auto checks = plan_checks(config, &outcome.slopes);
  outcome.reports.resize(checks.size());
  parallel_for(checks.size(), [&](std::size_t i) {
    try {
      outcome.reports[i] = checks[i].run();
    } catch (const std::exception& e) {
      ResidualReport r;
      r.name = checks[i].suite + ".error#" + std::to_string(i);
      r.rel_l2 = r.max_abs = std::nan("");
      r.detail = e.what();
      finalize(r);
      outcome.reports[i] = r;
    }
  });
  std::stable_sort(outcome.reports.begin(), outcome.reports.end(),
                   [](const auto& a, const auto& b) { return a.name < b.name; });
  std::sort(outcome.slopes.begin(), outcome.slopes.end(),
            [](const auto& a, const auto& b) { return a.alpha.re() < b.alpha.re(); });
  return outcome;
}

int run_suite(const SuiteConfig& config, std::ostream& log) {
  std::error_code ec;
  std::filesystem::create_directories(config.output, ec);
  if (ec) {
    log << "error: cannot create output directory " << config.output << ": " << ec.message()
        << '\n';
    return 2;
  }
  const SuiteOutcome outcome = execute_suite(config);
  try {
    emit_report(config.output / "report.json", outcome.reports, ReportFormat::json);
    std::ofstream csv(config.output / "norms.csv");
    if (!csv) throw Error("cannot write norms.csv");
    write_slope_csv(csv, outcome.slopes);

    std::ofstream summary(config.output / "summary.txt");
    if (!summary) throw Error("cannot write summary.txt");
    const int failed = outcome.failures();
    summary << "checks: " << outcome.reports.size() << "\n"
            << "passed: " << outcome.reports.size() - static_cast<std::size_t>(failed) << "\n"
            << "failed: " << failed << "\n";
    for (const auto& r : outcome.reports) {
      if (!r.pass) summary << "FAIL " << r.name << " error " << r.rel_l2 << " > " << r.tolerance
                           << " (" << r.detail << ")\n";
    }
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return 2;
  }
  for (const auto& r : outcome.reports) {
    log << (r.pass ? "PASS " : "FAIL ") << r.name << "  error " << r.rel_l2 << "  tol "
        << r.tolerance << '\n';
  }
  log << outcome.reports.size() - static_cast<std::size_t>(outcome.failures()) << "/"
      << outcome.reports.size() << " checks passed; reports in " << config.output.string() << '\n';
  return outcome.failures() == 0 ? 0 : 1;
}

}  // namespace pararadon::tools
