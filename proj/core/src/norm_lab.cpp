#include "pararadon/norm_lab.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/rational.hpp>
#include <Eigen/QR>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "pararadon/norms.hpp"
#include "pararadon/special.hpp"

namespace pararadon {

namespace {

using Rational = boost::rational<std::int64_t>;

Rational to_rational(Fraction f) { return {f.num, f.den}; }
Fraction to_fraction(Rational r) { return {r.numerator(), r.denominator()}; }

double inverse(double x) { return std::isinf(x) ? 0.0 : 1.0 / x; }

}  // namespace

ExponentPair admissible_exponents(double alpha0, int n) {
  ExponentPair e;
  e.alpha0 = alpha0;
  e.n = n;
  e.p = (n + 1.0) / (n + alpha0);
  e.q = alpha0 == 1.0 ? kInfinity : (n + 1.0) / (1.0 - alpha0);
  e.admissible = alpha0 >= 0.5 * (1 - n) && alpha0 <= 1.0;
  return e;
}

std::array<Fraction, 2> admissible_inverse_exponents(Fraction alpha0, int n) {
  const Rational a = to_rational(alpha0);
  const Rational np1(n + 1);
  return {to_fraction((Rational(n) + a) / np1), to_fraction((Rational(1) - a) / np1)};
}

std::array<double, 2> predicted_slopes(double alpha0, double p, double q, int n) {
  const double pi = inverse(p);
  const double qi = inverse(q);
  return {1.0 - n + (n - 1) * qi - (1.0 - n) * pi, -alpha0 - n * qi + pi};
}

std::array<Fraction, 2> predicted_slopes_exact(Fraction alpha0, Fraction p_inv, Fraction q_inv,
                                               int n) {
  const Rational a = to_rational(alpha0);
  const Rational pi = to_rational(p_inv);
  const Rational qi = to_rational(q_inv);
  const Rational e1 = Rational(1 - n) + Rational(n - 1) * qi - Rational(1 - n) * pi;
  const Rational e2 = -a - Rational(n) * qi + pi;
  return {to_fraction(e1), to_fraction(e2)};
}

FracOrder alpha_on_strip(StripPoint z, int n) {
  if (!(z.theta() >= 0.0 && z.theta() <= 1.0)) {
    throw Error("alpha_on_strip: Re z must lie in [0, 1]");
  }
  return FracOrder(0.5 * (1 + n) * z.z + 0.5 * (1 - n));
}

double interpolation_constant(double theta, const std::function<double(double)>& m0,
                              const std::function<double(double)>& m1) {
  if (!(theta > 0.0 && theta < 1.0)) throw Error("interpolation_constant: theta must be in (0, 1)");
  const double c = std::cos(kPi * theta);
  auto log_of = [](const std::function<double(double)>& m, double g) {
    const double v = m(g);
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error("interpolation_constant: M must be positive and finite");
    }
    return std::log(v);
  };
  auto integrand = [&](double g) {
    const double ch = std::cosh(kPi * g);
    if (std::isinf(ch)) return 0.0;
    return log_of(m0, g) / (ch - c) + log_of(m1, g) / (ch + c);
  };

  // walk outwards until the integrand has stayed below 1e-16 for a while
  constexpr double kStep = 0.5;
  constexpr double kLimit = 200.0;
  auto cutoff = [&](double dir) {
    int quiet = 0;
    double g = 0.0;
    while (quiet < 6) {
      g += kStep;
      if (g > kLimit) {
        throw Error("interpolation_constant: integrand does not decay; M grows too fast");
      }
      quiet = std::abs(integrand(dir * g)) < 1e-16 ? quiet + 1 : 0;
    }
    return g;
  };
  const double hi = cutoff(1.0);
  const double lo = cutoff(-1.0);

  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  const double integral = GK::integrate(integrand, -lo, 0.0, 20, 1e-14) +
                          GK::integrate(integrand, 0.0, hi, 20, 1e-14);
  return std::exp(0.5 * std::sin(kPi * theta) * integral);
}

double gamma_modulus_bound(double gamma) { return std::abs(rgamma(cplx(1.0, gamma))); }

ResidualReport l1_linf_bound_check(const TestFunction& f, double gamma, Sign sign,
                                   const GridSpec& grid, const QuadratureConfig& config,
                                   double tolerance) {
  const auto t0 = std::chrono::steady_clock::now();
  const Grid g(grid);
  const SampledField out = parabolic_fracint(f, FracOrder(1.0, gamma), sign, g, config);
  const double sup = lp_norm(out, kInfinity);
  const double bound = std::exp(0.5 * kPi * std::abs(gamma)) * lp_norm(sample(f, g), 1.0);

  ResidualReport r;
  std::ostringstream name;
  name << "l1_linf_bound[gamma=" << gamma << "," << to_string(sign) << "]";
  r.name = name.str();
  r.grid = grid;
  r.tolerance = tolerance;
  r.max_abs = std::max(0.0, sup - bound);
  if (bound > 0.0) {
    r.rel_l2 = std::max(0.0, sup / bound - 1.0);
  } else {
    r.rel_l2 = sup;
  }
  if (!std::isfinite(sup)) r.rel_l2 = sup;
  std::ostringstream d;
  d.precision(10);
  d << "sup " << sup << ", bound " << bound << ", sup/bound " << (bound > 0.0 ? sup / bound : 0.0);
  r.detail = d.str();
  finalize(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

double SlopeReport::max_slope_error() const {
  return std::max(std::abs(fitted[0] - predicted[0]), std::abs(fitted[1] - predicted[1]));
}

std::vector<double> default_lambdas() { return {0.25, 0.5, 1.0, 2.0, 4.0}; }

SlopeReport scaling_slope_experiment(FracOrder alpha, double p, double q,
                                     const std::vector<double>& lambda_grid,
                                     const SlopeSetup& setup) {
  if (lambda_grid.size() < 3) {
    throw Error("scaling_slope_experiment: degenerate fit, at least 3 lambda values needed");
  }
  if (alpha.re() < 0.0 || (alpha.re() == 0.0 && alpha.im() != 0.0)) {
    throw Error("scaling_slope_experiment: Re alpha must be positive, or alpha = 0");
  }
  if (!(p >= 1.0) || !(q >= 1.0)) throw Error("scaling_slope_experiment: p and q must be >= 1");
  for (double l : lambda_grid) {
    if (!(l > 0.0)) throw Error("scaling_slope_experiment: lambda values must be positive");
  }
  const int n = setup.f.dim();
  if (setup.out.dim != n || setup.in.dim != n) {
    throw Error("scaling_slope_experiment: grid dimension differs from the input");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const int last = n - 1;

  SlopeReport rep;
  rep.alpha = alpha;
  rep.n = n;
  rep.p = p;
  rep.q = q;
  rep.predicted = predicted_slopes(alpha.re(), p, q, n);

  for (double l1 : lambda_grid) {
    for (double l2 : lambda_grid) {
      const TestFunction fl = setup.f.dilated(l1, l2);
      GridSpec in = setup.in;
      GridSpec out = setup.out;
      for (int i = 0; i < last; ++i) {
        in.half_extent[i] /= l1;
        out.half_extent[i] *= l1 / l2;
      }
      in.half_extent[last] /= l2;
      out.half_extent[last] /= l2;
      const Grid og(out);
      const SampledField t = alpha == FracOrder{}
                                 ? transversal_radon(fl, og, setup.config)
                                 : transversal_fracint(fl, alpha, setup.sign, og, setup.config);
      SlopeRow row;
      row.lambda1 = l1;
      row.lambda2 = l2;
      row.lp_in = lp_norm(sample(fl, Grid(in)), p);
      row.lq_out = lp_norm(t, q);
      row.ratio = row.lq_out / row.lp_in;
      row.log_ratio = std::log(row.ratio);
      rep.rows.push_back(row);
    }
  }

  const auto m = static_cast<Eigen::Index>(rep.rows.size());
  Eigen::MatrixXd x(m, 3);
  Eigen::VectorXd y(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const SlopeRow& row = rep.rows[static_cast<std::size_t>(k)];
    x(k, 0) = 1.0;
    x(k, 1) = std::log(row.lambda1);
    x(k, 2) = std::log(row.lambda2);
    y(k) = row.log_ratio;
  }
  const Eigen::Vector3d beta = x.colPivHouseholderQr().solve(y);
  rep.intercept = beta(0);
  rep.fitted = {beta(1), beta(2)};
  rep.fit_rms = std::sqrt((x * beta - y).squaredNorm() / double(m));
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

void write_slope_csv(std::ostream& os, const std::vector<SlopeReport>& reports) {
  os << "lambda1,lambda2,lp_in,lq_out,ratio,log_ratio,predicted_e1,predicted_e2\n";
  const auto old = os.precision(17);
  for (const auto& rep : reports) {
    for (const auto& r : rep.rows) {
      os << r.lambda1 << ',' << r.lambda2 << ',' << r.lp_in << ',' << r.lq_out << ',' << r.ratio
         << ',' << r.log_ratio << ',' << rep.predicted[0] << ',' << rep.predicted[1] << '\n';
    }
  }
  os.precision(old);
}

}  // namespace pararadon
