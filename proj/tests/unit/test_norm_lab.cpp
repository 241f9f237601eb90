#include <gtest/gtest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <limits>
#include <sstream>

#include "pararadon/norm_lab.hpp"

using namespace pararadon;

TEST(NormLab, AdmissibleExponents) {
  const ExponentPair u = admissible_exponents(-0.5, 2);
  EXPECT_DOUBLE_EQ(u.p, 2.0);
  EXPECT_DOUBLE_EQ(u.q, 2.0);
  const ExponentPair r = admissible_exponents(0.0, 3);
  EXPECT_DOUBLE_EQ(r.p, 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.q, 4.0);
  const ExponentPair top = admissible_exponents(1.0, 2);
  EXPECT_DOUBLE_EQ(top.p, 1.0);
  EXPECT_TRUE(std::isinf(top.q));
  EXPECT_FALSE(admissible_exponents(1.5, 2).admissible);
  EXPECT_FALSE(admissible_exponents(-1.0, 2).admissible);
}

TEST(NormLab, ExactSlopesVanishOnlyAtTheAdmissiblePair) {
  for (Fraction a : {Fraction{-1, 2}, Fraction{0, 1}, Fraction{1, 3}, Fraction{1, 1}}) {
    const auto inv = admissible_inverse_exponents(a, 2);
    const auto e = predicted_slopes_exact(a, inv[0], inv[1], 2);
    EXPECT_EQ(e[0], (Fraction{0, 1}));
    EXPECT_EQ(e[1], (Fraction{0, 1}));
  }
  const auto half = admissible_inverse_exponents({1, 2}, 2);
  EXPECT_EQ(half[0], (Fraction{5, 6}));
  EXPECT_EQ(half[1], (Fraction{1, 6}));
  // 1/p = 1/q = 1/2 at alpha0 = 0: e1 = 0, e2 = -1/2
  const auto off = predicted_slopes_exact({0, 1}, {1, 2}, {1, 2}, 2);
  EXPECT_EQ(off[0], (Fraction{0, 1}));
  EXPECT_EQ(off[1], (Fraction{-1, 2}));
  const auto approx = predicted_slopes(0.0, 2.0, 2.0, 2);
  EXPECT_DOUBLE_EQ(approx[1], -0.5);
}

TEST(NormLab, StripParametrisation) {
  EXPECT_DOUBLE_EQ(alpha_on_strip({cplx(0.0, 0.0)}, 2).re(), -0.5);
  EXPECT_DOUBLE_EQ(alpha_on_strip({cplx(1.0, 2.0)}, 2).re(), 1.0);
  EXPECT_DOUBLE_EQ(alpha_on_strip({cplx(1.0, 2.0)}, 2).im(), 3.0);
  EXPECT_DOUBLE_EQ(alpha_on_strip({cplx(0.0, 0.0)}, 3).re(), -1.0);
  EXPECT_THROW(alpha_on_strip({cplx(1.2, 0.0)}, 2), Error);
}

TEST(NormLab, InterpolationConstantForConstantBounds) {
  auto one = [](double) { return 1.0; };
  EXPECT_NEAR(interpolation_constant(0.4, one, one), 1.0, 1e-14);
  auto two = [](double) { return 2.0; };
  auto five = [](double) { return 5.0; };
  for (double t : {0.1, 0.5, 0.8}) {
    EXPECT_NEAR(interpolation_constant(t, two, five), std::pow(2.0, 1 - t) * std::pow(5.0, t), 1e-12);
  }
  EXPECT_THROW(interpolation_constant(0.0, one, one), Error);
  EXPECT_THROW(interpolation_constant(0.5, one, [](double) { return 0.0; }), Error);
}

TEST(NormLab, InterpolationConstantWithGrowingBound) {
  // M0 = 1, M1(g) = e^{pi |g| / 2} / |Gamma(1 + i g)|
  auto one = [](double) { return 1.0; };
  auto m1 = [](double g) { return std::exp(kPi * std::abs(g) / 2.0) * gamma_modulus_bound(g); };
  for (double t : {0.25, 0.5, 0.75}) {
    const double c = std::cos(kPi * t);
    // the integrand is even; exp_sinh on (0, inf) avoids the kink at 0
    boost::math::quadrature::exp_sinh<double> es;
    const double integral = 2.0 * es.integrate([&](double g) {
      const double a = kPi * std::abs(g);
      if (a > 600.0) return 0.0;
      // log(sinh(a)/a) without overflow
      const double log_ratio = a < 1e-6 ? a * a / 6.0
                                        : a + std::log1p(-std::exp(-2.0 * a)) - std::log(2.0 * a);
      return (a / 2.0 + 0.5 * log_ratio) / (std::cosh(kPi * g) + c);
    }, 0.0, std::numeric_limits<double>::infinity());
    const double ref = std::exp(std::sin(kPi * t) / 2.0 * integral);
    EXPECT_NEAR(interpolation_constant(t, one, m1), ref, 1e-10 * ref);
  }
}

TEST(NormLab, InterpolationConstantSymmetry) {
  auto a = [](double g) { return 1.0 + g * g; };
  auto b = [](double g) { return std::exp(0.3 * std::abs(g)); };
  EXPECT_NEAR(interpolation_constant(0.3, a, b), interpolation_constant(0.7, b, a), 1e-12);
}

TEST(NormLab, GammaModulusBound) {
  EXPECT_DOUBLE_EQ(gamma_modulus_bound(0.0), 1.0);
  EXPECT_NEAR(gamma_modulus_bound(1.0), std::sqrt(std::sinh(kPi) / kPi), 1e-14);
  EXPECT_NEAR(gamma_modulus_bound(1.0), 1.9173, 1e-4);
  EXPECT_DOUBLE_EQ(gamma_modulus_bound(-2.5), gamma_modulus_bound(2.5));
}

TEST(NormLab, L1ToLinfBound) {
  const GridSpec g = GridSpec::cube(2, 6.0, 48);
  for (double gm : {0.0, 1.0}) {
    const ResidualReport r = l1_linf_bound_check(TestFunction::unit_gaussian(2), gm, Sign::plus, g);
    EXPECT_TRUE(r.pass) << gm;
  }
}

namespace {
SlopeSetup small_setup() {
  SlopeSetup s;
  s.out = GridSpec::cube(2, 4.0, 8);
  s.in = GridSpec::cube(2, 6.0, 48);
  return s;
}
}  // namespace

TEST(NormLab, ScalingSlopesAreExactAtTheSharpPair) {
  const ExponentPair e = admissible_exponents(1.0, 2);
  const SlopeReport r = scaling_slope_experiment(1.0, e.p, e.q, {0.5, 1.0, 2.0}, small_setup());
  EXPECT_LT(r.max_slope_error(), 1e-10);
  EXPECT_EQ(r.rows.size(), 9u);
  EXPECT_LT(r.fit_rms, 1e-10);
}

TEST(NormLab, ScalingSlopesFollowAPerturbedExponent) {
  const ExponentPair e = admissible_exponents(0.5, 2);
  const double q = 1.1 * e.q;
  const SlopeReport r = scaling_slope_experiment(0.5, e.p, q, {0.5, 1.0, 2.0}, small_setup());
  const auto pred = predicted_slopes(0.5, e.p, q, 2);
  EXPECT_NEAR(r.fitted[0], pred[0], 1e-10);
  EXPECT_NEAR(r.fitted[1], pred[1], 1e-10);
  EXPECT_GT(std::abs(pred[1]), 1e-3);
}

TEST(NormLab, ScalingFitNeedsThreeLambdas) {
  EXPECT_THROW(scaling_slope_experiment(1.0, 1.0, INFINITY, {1.0, 2.0}, small_setup()), Error);
}

TEST(NormLab, SlopeCsvHeader) {
  std::ostringstream os;
  write_slope_csv(os, {});
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')),
            "lambda1,lambda2,lp_in,lq_out,ratio,log_ratio,predicted_e1,predicted_e2");
}
