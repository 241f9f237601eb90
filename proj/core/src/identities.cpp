#include "pararadon/identities.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "pararadon/norms.hpp"

namespace pararadon {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string order_text(FracOrder a) {
  std::ostringstream s;
  s << a.re();
  if (a.im() != 0.0) s << (a.im() > 0 ? "+" : "") << a.im() << "i";
  return s.str();
}

std::string label(const char* base, std::initializer_list<std::pair<const char*, FracOrder>> orders,
                  Sign sign) {
  std::ostringstream s;
  s << base << "[";
  bool first = true;
  for (const auto& [name, a] : orders) {
    if (!first) s << ",";
    s << name << "=" << order_text(a);
    first = false;
  }
  s << "," << to_string(sign) << "]";
  return s.str();
}

// largest relative deviation |a - b| / |b| over the off-plane frequency nodes
ResidualReport symbol_report(std::string name, const GridSpec& spec,
                             const std::function<std::pair<cplx, cplx>(const Point&)>& sides,
                             double tolerance) {
  const auto t0 = Clock::now();
  const Grid g(spec);
  const int last = g.dim() - 1;
  double worst = 0.0;
  double worst_abs = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const Point xi = g.frequency(j);
    if (xi[last] == 0.0) continue;
    const auto [a, b] = sides(xi);
    const double d = std::abs(a - b);
    const double rel = d / std::abs(b);
    if (!(rel <= worst)) worst = rel;
    if (!(d <= worst_abs)) worst_abs = d;
  }
  ResidualReport r;
  r.name = std::move(name);
  r.grid = spec;
  r.max_abs = worst_abs;
  r.rel_l2 = worst;
  r.tolerance = tolerance;
  r.detail = "max relative deviation over nodes with xi_n != 0";
  finalize(r);
  r.seconds = since(t0);
  return r;
}

cplx minus_i_power(double t, cplx lambda, Sign sign) {
  // (-+ i t)^lambda
  return branch_power(t, lambda, sign == Sign::plus ? PowerForm::minus_i() : PowerForm::plus_i());
}

}  // namespace

ColumnGrids ColumnGrids::standard(int n) {
  ColumnGrids c;
  c.column.dim = n;
  c.window.dim = n;
  for (int i = 0; i + 1 < n; ++i) {
    c.column.half_extent[i] = 1.0;
    c.column.points[i] = 8;
    c.window.half_extent[i] = 1.0;
    c.window.points[i] = 8;
  }
  c.column.half_extent[n - 1] = 8.0;
  c.column.points[n - 1] = 512;
  c.window.half_extent[n - 1] = 4.0;
  c.window.points[n - 1] = 256;
  return c;
}

ResidualReport check_duality(const TestFunction& f, const TestFunction& phi, FracOrder alpha,
                             Sign sign, const GridSpec& grid, const QuadratureConfig& config,
                             double tolerance) {
  const auto t0 = Clock::now();
  const Grid g(grid);
  const cplx lhs = pairing(parabolic_fracint(f, alpha, sign, g, config), sample(phi, g));
  const cplx rhs = pairing(sample(f, g), dual_parabolic_fracint(phi, alpha, opposite(sign), g,
                                                                 config));
  ResidualReport r =
      compare_values(label("duality", {{"alpha", alpha}}, sign), grid, lhs, rhs, tolerance);
  std::ostringstream d;
  d.precision(17);
  d << "<P f, phi> = " << lhs << ", <f, *P phi> = " << rhs;
  r.detail = d.str();
  r.seconds = since(t0);
  return r;
}

ResidualReport check_semigroup(const TestFunction& f, FracOrder alpha, FracOrder beta, Sign sign,
                               const ColumnGrids& grids, const QuadratureConfig& config,
                               double tolerance) {
  const auto t0 = Clock::now();
  const Grid window(grids.window);
  const SampledField ref = parabolic_fracint(f, alpha + beta, sign, window, config);
  SampledField lhs = SampledField::zeros(window);
  if (beta == FracOrder{}) {
    lhs = parabolic_fracint(f, alpha, sign, window, config);
  } else {
    const SampledField inner = parabolic_fracint(f, alpha, sign, Grid(grids.column), config);
    lhs = riemann_liouville_1d(interpolate(inner), beta, sign, window, config);
  }
  ResidualReport r = compare_fields(label("semigroup", {{"alpha", alpha}, {"beta", beta}}, sign),
                                    lhs, ref, tolerance);
  r.detail = "I^beta applied to sampled P^alpha f on " + describe(grids.column);
  r.seconds = since(t0);
  return r;
}

ResidualReport check_factorization(const TestFunction& f, FracOrder alpha, Sign sign,
                                   const ColumnGrids& grids, const QuadratureConfig& config,
                                   double tolerance) {
  const auto t0 = Clock::now();
  const Grid window(grids.window);
  const SampledField ref = parabolic_fracint(f, alpha, sign, window, config);
  const SampledField radon = parabolic_radon(f, Grid(grids.column), config);
  const SampledField lhs = riemann_liouville_1d(interpolate(radon), alpha, sign, window, config);
  ResidualReport r =
      compare_fields(label("factorization", {{"alpha", alpha}}, sign), lhs, ref, tolerance);
  r.detail = "I^alpha applied to sampled P f on " + describe(grids.column);
  r.seconds = since(t0);
  return r;
}

ResidualReport check_composition_riesz(const TestFunction& f, FracOrder alpha, Sign sign,
                                       const GridSpec& grid, SingularPolicy policy,
                                       double tolerance) {
  const auto t0 = Clock::now();
  const Grid g(grid);
  const int n = g.dim();
  const SampledField fs = sample(f, g);
  const SampledField once = apply_multiplier(fs, make_multiplier(g, alpha, sign, false, policy));
  const SampledField lhs = apply_multiplier(once, make_multiplier(g, alpha, sign, true, policy));
  const cplx lambda = 2.0 * alpha.value() + double(n - 1);
  const SampledField rhs = std::pow(kPi, n - 1) * riesz_potential_n(fs, lambda, policy);
  ResidualReport r =
      compare_fields(label("composition_riesz", {{"alpha", alpha}}, sign), lhs, rhs, tolerance);
  r.detail = std::string("policy ") + to_string(policy);
  r.seconds = since(t0);
  return r;
}

ResidualReport check_unitary(const TestFunction& f, double gamma, Sign sign, const GridSpec& grid,
                             SingularPolicy policy, double tolerance) {
  const auto t0 = Clock::now();
  const Grid g(grid);
  const int n = g.dim();
  const FracOrder alpha(0.5 * (1 - n), gamma);
  const SampledField fs = sample(f, g);
  const SampledField out =
      std::pow(kPi, 0.5 * (1 - n)) * apply_multiplier(fs, make_multiplier(g, alpha, sign, false,
                                                                          policy));
  const double in_norm = lp_norm(fs, 2.0);
  const double ratio = in_norm > 0.0 ? lp_norm(out, 2.0) / in_norm : 0.0;
  const double bound = std::exp(0.5 * kPi * std::abs(gamma));

  ResidualReport r;
  r.name = label("unitary", {{"alpha", alpha}}, sign);
  r.grid = grid;
  r.tolerance = tolerance;
  if (in_norm == 0.0) {
    r.max_abs = r.rel_l2 = lp_norm(out, 2.0);
  } else if (gamma == 0.0) {
    r.max_abs = r.rel_l2 = std::abs(ratio - 1.0);
  } else {
    r.max_abs = r.rel_l2 = std::isfinite(ratio) ? std::max(0.0, ratio - bound) : ratio;
  }
  std::ostringstream d;
  d.precision(17);
  d << "norm ratio " << ratio;
  if (gamma != 0.0) d << ", bound " << bound;
  r.detail = d.str();
  finalize(r);
  r.seconds = since(t0);
  return r;
}

ResidualReport check_derivative_ladder(const TestFunction& f, FracOrder alpha, int ell, Sign sign,
                                       const GridSpec& grid, const QuadratureConfig& config,
                                       double tolerance) {
  if (ell < 0) throw Error("check_derivative_ladder: ell must be non-negative");
  const auto t0 = Clock::now();
  const Grid g(grid);
  const FracOrder lowered = alpha - FracOrder(ell);
  // (+-d_n)^ell commutes with P^alpha, so it is applied to f exactly
  TestFunction df = f.derivative_n(ell);
  if (sign == Sign::minus && ell % 2 == 1) df = df.scaled(-1.0);
  const Grid inner = g.interior();
  const SampledField lhs = parabolic_fracint(df, alpha, sign, inner, config);
  const SampledField rhs = restrict_to(apply_multiplier(f, make_multiplier(g, lowered, sign)), inner);
  ResidualReport r = compare_fields(
      label("derivative_ladder", {{"alpha", alpha}, {"ell", FracOrder(ell)}}, sign), lhs, rhs,
      tolerance);
  r.grid = inner.spec();
  r.detail = "quadrature of the differentiated input vs multiplier of order alpha - ell, on the "
             "interior of " + describe(grid);
  r.seconds = since(t0);
  return r;
}

ResidualReport check_multiplier_product(const GridSpec& grid, FracOrder alpha, FracOrder beta,
                                        Sign sign, double tolerance) {
  const int n = grid.dim;
  const double s = sign_value(sign);
  const cplx diff = alpha.value() - beta.value();
  const cplx total = alpha.value() + beta.value() + double(n - 1);
  const double c = std::pow(kPi, n - 1);
  return symbol_report(
      label("multiplier_product", {{"alpha", alpha}, {"beta", beta}}, sign), grid,
      [&](const Point& xi) -> std::pair<cplx, cplx> {
        const double t = xi[n - 1];
        const double sg = t > 0.0 ? 1.0 : -1.0;
        const cplx lhs = symbol_q(xi, n, beta, sign, true) * symbol_q(xi, n, alpha, sign);
        const cplx rhs =
            c * std::exp(-total * std::log(std::abs(t)) + s * diff * cplx(0.0, 0.5 * kPi * sg));
        return {lhs, rhs};
      },
      tolerance);
}

ResidualReport check_symbol_ladder(const GridSpec& grid, FracOrder alpha, int ell, Sign sign,
                                   double tolerance) {
  const int n = grid.dim;
  return symbol_report(
      label("symbol_ladder", {{"alpha", alpha}, {"ell", FracOrder(ell)}}, sign), grid,
      [&](const Point& xi) -> std::pair<cplx, cplx> {
        const cplx lhs = symbol_q(xi, n, alpha - FracOrder(ell), sign);
        const cplx rhs = minus_i_power(xi[n - 1], double(ell), sign) * symbol_q(xi, n, alpha, sign);
        return {lhs, rhs};
      },
      tolerance);
}

ResidualReport check_symbol_semigroup(const GridSpec& grid, FracOrder alpha, FracOrder beta,
                                      Sign sign, double tolerance) {
  const int n = grid.dim;
  return symbol_report(
      label("symbol_semigroup", {{"alpha", alpha}, {"beta", beta}}, sign), grid,
      [&](const Point& xi) -> std::pair<cplx, cplx> {
        const cplx lhs =
            symbol_q(xi, n, alpha, sign) * minus_i_power(xi[n - 1], -beta.value(), sign);
        return {lhs, symbol_q(xi, n, alpha + beta, sign)};
      },
      tolerance);
}

ResidualReport check_limit_alpha_zero(const TestFunction& f, const std::vector<double>& alphas,
                                      Sign sign, bool dual, const GridSpec& grid,
                                      const QuadratureConfig& config, double tolerance,
                                      std::vector<double>* errors) {
  if (alphas.empty()) throw Error("check_limit_alpha_zero: empty alpha sequence");
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    if (!(alphas[k] > 0.0) || (k > 0 && !(alphas[k] < alphas[k - 1]))) {
      throw Error("check_limit_alpha_zero: alphas must be positive and strictly decreasing");
    }
  }
  const auto t0 = Clock::now();
  const Grid g(grid);
  const SampledField base = dual ? dual_parabolic_radon(f, g, config) : parabolic_radon(f, g, config);
  const double scale = lp_norm(base, kInfinity);

  std::vector<double> e;
  double last_abs = 0.0;
  for (double a : alphas) {
    const SampledField v = dual ? dual_parabolic_fracint(f, a, sign, g, config)
                                : parabolic_fracint(f, a, sign, g, config);
    last_abs = max_abs_diff(v, base);
    e.push_back(scale > 0.0 ? last_abs / scale : last_abs);
  }
  double measured = e.back();
  double worst_ratio = 0.0;
  for (std::size_t k = 1; k < e.size(); ++k) {
    const double ratio = e[k - 1] > 0.0 ? e[k] / e[k - 1] : (e[k] > 0.0 ? kInfinity : 0.0);
    if (!(ratio <= worst_ratio)) worst_ratio = ratio;
  }
  bool monotone = true;
  for (std::size_t k = 1; k < e.size(); ++k) {
    if (!(e[k] < e[k - 1]) && !(e[k] == 0.0 && e[k - 1] == 0.0)) monotone = false;
  }
  if (!monotone) measured = std::max(measured, worst_ratio);

  ResidualReport r;
  r.name = std::string(dual ? "limit_alpha_zero_dual[" : "limit_alpha_zero[") + to_string(sign) + "]";
  r.grid = grid;
  r.max_abs = last_abs;
  r.rel_l2 = measured;
  r.tolerance = tolerance;
  std::ostringstream d;
  d << "sup errors";
  for (std::size_t k = 0; k < e.size(); ++k) d << " " << alphas[k] << ":" << e[k];
  d << (monotone ? " (decreasing)" : " (not decreasing)");
  r.detail = d.str();
  finalize(r);
  r.seconds = since(t0);
  if (errors) *errors = e;
  return r;
}

}  // namespace pararadon
