// One PASS/FAIL line per acceptance criterion. Exits 0 once every criterion
// has been evaluated; with --strict the exit code is 1 when any line fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pararadon/identities.hpp"
#include "pararadon/norm_lab.hpp"
#include "pararadon/norms.hpp"
#include "pararadon/special.hpp"
#include "pararadon/transversal.hpp"

using namespace pararadon;

namespace {

struct Outcome {
  bool pass = false;
  std::string measured;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<TestFunction> phi_functions(int n) {
  const int last = n - 1;
  std::array<double, kMaxDim> c1{}, w1{}, c2{}, w2{}, w3{};
  for (int i = 0; i < last; ++i) {
    c1[i] = 0.4;
    w1[i] = 0.9;
    c2[i] = -0.5;
    w2[i] = 1.2;
    w3[i] = 0.7;
  }
  c1[last] = -0.3;
  w1[last] = 1.1;
  c2[last] = 0.2;
  w2[last] = 0.8;
  w3[last] = 1.0;
  return {TestFunction::phi_class(n, {}, {1.0, 1.0, 1.0}, 6.0),
          TestFunction::phi_class(n, c1, w1, 7.0, 1),
          TestFunction::phi_class(n, c2, w2, 9.0, 2),
          TestFunction::phi_class(n, {}, w3, -6.5),
          TestFunction::phi_moment(n)};
}

TestFunction offset_gaussian() { return TestFunction::gaussian(2, {0.3, -0.2}, {0.8, 0.6}); }

FracOrder random_order(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = 3.0 * std::sqrt(u(rng));
  const double t = 2.0 * kPi * u(rng);
  return {r * std::cos(t), r * std::sin(t)};
}

Outcome multiplier_algebra() {
  const auto t0 = Clock::now();
  const GridSpec g = GridSpec::cube(2, 8.0, 64);
  std::mt19937_64 rng(7);
  double worst = 0.0;
  auto take = [&](const ResidualReport& r) { worst = std::max(worst, r.rel_l2); };
  for (Sign s : {Sign::plus, Sign::minus}) {
    take(check_multiplier_product(g, FracOrder{}, FracOrder{}, s));
  }
  for (int k = 0; k < 20; ++k) {
    const FracOrder a = random_order(rng);
    const FracOrder b = random_order(rng);
    for (Sign s : {Sign::plus, Sign::minus}) {
      take(check_multiplier_product(g, a, b, s));
      take(check_multiplier_product(g, a, a, s));
      take(check_symbol_semigroup(g, a, b, s));
      for (int ell = 1; ell <= 3; ++ell) take(check_symbol_ladder(g, a, ell, s));
    }
  }
  const double t = seconds_since(t0);
  return {std::isfinite(worst) && worst <= 1e-12 && t < 1.0,
          fmt("max relative symbol error %.2e (limit 1e-12), %.2f s (limit 1 s)", worst, t)};
}

Outcome unitarity() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int n : {2, 3}) {
    const GridSpec g = GridSpec::cube(n, 8.0, n == 2 ? 128 : 64);
    for (const auto& f : phi_functions(n)) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        worst = std::max(worst, check_unitary(f, 0.0, s, g).rel_l2);
      }
    }
  }
  const double t = seconds_since(t0);
  return {std::isfinite(worst) && worst <= 1e-10 && t < 5.0,
          fmt("max |ratio - 1| %.2e over 5 functions, n = 2, 3 (limit 1e-10), %.2f s (limit 5 s)",
              worst, t)};
}

Outcome spatial_vs_spectral() {
  const auto t0 = Clock::now();
  const TestFunction f = TestFunction::phi_class(2, {}, {1.0, 1.0, 1.0}, 6.0);
  bool ok = true;
  std::string text;
  for (double a : {1.0, 0.5}) {
    double err[2];
    int k = 0;
    for (int n : {128, 256}) {
      const Grid g(GridSpec::cube(2, 8.0, n));
      const Grid inner = g.interior();
      const SampledField quad = parabolic_fracint(f, a, Sign::plus, inner);
      const SampledField spec =
          restrict_to(apply_multiplier(f, make_multiplier(g, a, Sign::plus)), inner);
      err[k++] = relative_l2_error(quad, spec);
    }
    const bool within = std::isfinite(err[0]) && err[0] <= 1e-3;
    const bool decreasing = err[1] < err[0];
    ok = ok && within && decreasing;
    text += fmt("alpha=%g: %.3e at 128, %.3e at 256 (%s); ", a, err[0], err[1],
                decreasing ? "decreasing" : "not decreasing");
  }
  const double t = seconds_since(t0);
  ok = ok && t < 120.0;
  return {ok, text + fmt("limit 1e-3, %.1f s (limit 120 s)", t)};
}

Outcome radon_limit() {
  const auto t0 = Clock::now();
  std::vector<double> e;
  const ResidualReport r =
      check_limit_alpha_zero(TestFunction::unit_gaussian(2), {0.4, 0.2, 0.1, 0.05}, Sign::plus,
                             false, GridSpec::cube(2, 4.0, 32), {}, 5e-2, &e);
  const double t = seconds_since(t0);
  bool decreasing = true;
  for (std::size_t k = 1; k < e.size(); ++k) decreasing = decreasing && e[k] < e[k - 1];
  return {r.pass && decreasing && t < 60.0,
          fmt("sup errors %.4f, %.4f, %.4f, %.4f (%s); %.4f at alpha=0.05 (limit 5e-2), %.1f s",
              e[0], e[1], e[2], e[3], decreasing ? "decreasing" : "not decreasing", e[3], t)};
}

Outcome duality_semigroup_factorization() {
  const TestFunction f = offset_gaussian();
  const TestFunction phi = TestFunction::unit_gaussian(2);
  const ColumnGrids columns = ColumnGrids::standard(2);
  const GridSpec pairing_grid = GridSpec::cube(2, 6.0, 48);
  const double tol = Tolerances{}.quad_quad;
  double worst = 0.0;
  bool ok = true;
  auto take = [&](const ResidualReport& r) {
    worst = std::max(worst, r.rel_l2);
    ok = ok && r.pass;
  };
  for (double a : {1.0, 0.5}) {
    take(check_duality(f, phi, a, Sign::plus, pairing_grid, {}, tol));
    take(check_factorization(f, a, Sign::plus, columns, {}, tol));
    for (double b : {1.0, 0.5}) take(check_semigroup(f, a, b, Sign::plus, columns, {}, tol));
  }
  return {ok, fmt("max relative error %.2e over 8 checks (limit 1e-5)", worst)};
}

Outcome riesz_composition() {
  double worst = 0.0;
  bool ok = true;
  for (int n : {2, 3}) {
    const GridSpec g = GridSpec::cube(n, 8.0, n == 2 ? 128 : 64);
    const auto fs = phi_functions(n);
    for (std::size_t i = 0; i < 2; ++i) {
      for (double a : {0.0, 0.5}) {
        for (Sign s : {Sign::plus, Sign::minus}) {
          const ResidualReport r = check_composition_riesz(fs[i], a, s, g);
          worst = std::max(worst, r.rel_l2);
          ok = ok && r.pass;
        }
      }
    }
  }
  return {ok, fmt("max relative error %.2e (limit 1e-10)", worst)};
}

Outcome conjugation() {
  const TestFunction f = TestFunction::unit_gaussian(2);
  const Grid out(GridSpec::cube(2, 2.0, 16));
  QuadratureConfig base;
  base.inner_step = 0.4;
  base.jacobi_nodes = 4;
  base.panel_nodes = 3;
  const double coarse = conjugation_residual(f, 1.0, Sign::plus, out, base).rel_l2;
  const double fine = conjugation_residual(f, 1.0, Sign::plus, out, base.refined()).rel_l2;
  const double standard = conjugation_residual(f, 1.0, Sign::plus, out).rel_l2;
  const double shrink = fine > 0.0 ? coarse / fine : INFINITY;
  const bool ok = std::isfinite(coarse) && coarse <= 1e-3 && shrink >= 4.0 && standard <= 1e-3;
  return {ok, fmt("residual %.2e at the coarse rule, %.2e with node counts doubled (shrink %.0fx, "
                  "limit 4x); %.2e at the default rule (limit 1e-3)",
                  coarse, fine, shrink, standard)};
}

Outcome sharp_exponents() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string text;
  const std::vector<Fraction> exact{{0, 1}, {1, 2}, {1, 1}};
  for (Fraction a : exact) {
    const auto inv = admissible_inverse_exponents(a, 2);
    const auto e = predicted_slopes_exact(a, inv[0], inv[1], 2);
    ok = ok && e[0] == Fraction{0, 1} && e[1] == Fraction{0, 1};
  }
  const ExponentPair radon = admissible_exponents(0.0, 2);
  ok = ok && radon.p == 1.5 && radon.q == 3.0;
  for (double a : {0.0, 0.5, 1.0}) {
    const ExponentPair e = admissible_exponents(a, 2);
    const SlopeReport r = scaling_slope_experiment(a, e.p, e.q, default_lambdas());
    ok = ok && r.max_slope_error() <= 0.02;
    text += fmt("alpha=%g (p,q)=(%g,%g) fitted (%.1e, %.1e); ", a, e.p, e.q, r.fitted[0],
                r.fitted[1]);
  }
  const double t = seconds_since(t0);
  ok = ok && t < 120.0;
  return {ok, text + fmt("exact zero slopes at the admissible pairs: %s; %.1f s (limit 120 s)",
                         ok ? "yes" : "see above", t)};
}

Outcome l1_linf() {
  bool ok = true;
  double worst_ratio = 0.0;
  double worst_gamma = 0.0;
  const std::vector<TestFunction> fs{TestFunction::unit_gaussian(2), offset_gaussian()};
  for (double g : {0.0, 0.5, 1.0}) {
    for (const auto& f : fs) {
      const ResidualReport r = l1_linf_bound_check(f, g, Sign::plus, GridSpec::cube(2, 6.0, 48));
      ok = ok && r.pass;
      worst_ratio = std::max(worst_ratio, r.rel_l2);
    }
    const double mod2 = std::norm(gamma(cplx(1.0, g)));
    const double ref = g == 0.0 ? 1.0 : kPi * g / std::sinh(kPi * g);
    worst_gamma = std::max(worst_gamma, std::abs(mod2 - ref));
  }
  ok = ok && worst_gamma <= 1e-12;
  return {ok, fmt("largest excess over the bound %.2e (limit 1e-3); "
                  "max | |Gamma(1+ig)|^2 - pi g/sinh(pi g) | %.2e (limit 1e-12)",
                  worst_ratio, worst_gamma)};
}

Outcome branch_correctness() {
  const cplx root = branch_power(1.0, 0.5, PowerForm::minus_i());
  const double branch_err = std::abs(root - std::exp(cplx(0.0, -0.25 * kPi)));
  const double eps = 1e-6;
  const Grid g(GridSpec::cube(2, 8.0, 64));
  double worst_rel = 0.0;
  double worst_abs = 0.0;
  for (FracOrder a : {FracOrder(1.0), FracOrder(0.5), FracOrder(0.3, 1.2)}) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        const Point xi = g.frequency(j);
        if (std::abs(xi[1]) < 0.1) continue;
        const cplx q = symbol_q(xi, 2, a, s);
        const cplx d = symbol_q_regularized(xi, 2, a, s, eps) - q;
        worst_abs = std::max(worst_abs, std::abs(d));
        worst_rel = std::max(worst_rel, std::abs(d) / std::abs(q));
      }
    }
  }
  return {branch_err <= 1e-15 && worst_rel <= 1e-8,
          fmt("|(-i)^(1/2) - e^(-i pi/4)| = %.1e; regularised symbol at eps=1e-6, |xi_n| >= 0.1: "
              "max relative error %.2e, max absolute %.2e (limit 1e-8)",
              branch_err, worst_rel, worst_abs)};
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--strict") == 0) {
      strict = true;
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    }
  }
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"multiplier algebra", multiplier_algebra},
      {"unitarity", unitarity},
      {"spatial vs spectral", spatial_vs_spectral},
      {"radon limit", radon_limit},
      {"duality, semigroup, factorization", duality_semigroup_factorization},
      {"riesz composition", riesz_composition},
      {"conjugation", conjugation},
      {"sharp exponents", sharp_exponents},
      {"l1 -> linf constant", l1_linf},
      {"branch correctness", branch_correctness},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (only != 0 && only != id) continue;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("criterion %2d %-34s %s  %s\n", id, criteria[k].first, o.pass ? "PASS" : "FAIL",
                o.measured.c_str());
    std::fflush(stdout);
  }
  return strict && failed > 0 ? 1 : 0;
}
