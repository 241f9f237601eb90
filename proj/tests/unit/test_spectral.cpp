#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pararadon/diagnostics.hpp"
#include "pararadon/norms.hpp"
#include "pararadon/spatial.hpp"
#include "pararadon/spectral.hpp"

using namespace pararadon;

TEST(Spectral, BranchPowers) {
  EXPECT_LT(std::abs(branch_power(1.0, 0.5, PowerForm::minus_i()) - std::exp(cplx(0, -kPi / 4))), 1e-16);
  EXPECT_LT(std::abs(branch_power(-1.0, 0.5, PowerForm::minus_i()) - std::exp(cplx(0, kPi / 4))), 1e-16);
  EXPECT_LT(std::abs(branch_power(2.0, 1.0, PowerForm::plus_i()) - cplx(0, 2)), 1e-15);
  EXPECT_LT(std::abs(branch_power(-3.0, 2.0, PowerForm::minus_i()) - cplx(-9.0)), 1e-13);
  const cplx l(0.3, -1.1);
  for (double t : {-2.5, 0.4}) {
    EXPECT_LT(std::abs(branch_power(t, l, PowerForm::minus_i()) - oracle::minus_i_pow(t, l)), 1e-14);
  }
  // the shifted power approaches the unshifted one
  const cplx lim = branch_power(0.7, l, PowerForm::minus_i());
  EXPECT_LT(std::abs(branch_power(0.7, l, PowerForm::shifted(1e-10, Sign::plus)) - lim), 1e-9);
  EXPECT_THROW(branch_power(0.0, 0.5, PowerForm::minus_i()), Error);
  EXPECT_THROW(branch_power(1.0, 0.5, PowerForm::shifted(0.0, Sign::plus)), Error);
}

TEST(Spectral, SymbolMatchesKernelTransform) {
  const double pts[][3] = {{0.3, 1.7, 0.5}, {-2.0, -0.4, -1.3}, {1.1, 0.9, -2.2}};
  for (cplx a : {cplx(1.0), cplx(0.5), cplx(0.3, 1.2), cplx(-0.8, 0.0)}) {
    for (int s : {1, -1}) {
      for (int n : {2, 3}) {
        for (const auto& p : pts) {
          const double v[3] = {p[0], p[1], n == 3 ? p[2] : 0.0};
          const cplx got = symbol_q({v[0], v[1], v[2]}, n, FracOrder(a),
                                    s > 0 ? Sign::plus : Sign::minus);
          const cplx ref = oracle::symbol(v, n, a, s);
          EXPECT_LT(std::abs(got - ref), 1e-13 * std::abs(ref));
        }
      }
    }
  }
  EXPECT_THROW(symbol_q({1.0, 0.0, 0.0}, 2, 1.0, Sign::plus), Error);
}

TEST(Spectral, DualSymbolReversesLastFrequency) {
  const Point xi{0.4, -1.3, 0.0};
  const Point flipped{0.4, 1.3, 0.0};
  EXPECT_LT(std::abs(symbol_q(xi, 2, 0.5, Sign::minus, true) - symbol_q(flipped, 2, 0.5, Sign::minus)),
            1e-15);
}

TEST(Spectral, RegularisedSymbolConvergesAtFirstOrder) {
  const Point xi{1.5, 0.6, 0.0};
  for (Sign s : {Sign::plus, Sign::minus}) {
    const cplx q = symbol_q(xi, 2, 0.5, s);
    const double e1 = std::abs(symbol_q_regularized(xi, 2, 0.5, s, 1e-4) - q);
    const double e2 = std::abs(symbol_q_regularized(xi, 2, 0.5, s, 1e-5) - q);
    EXPECT_GT(e1, 0.0);
    EXPECT_NEAR(e1 / e2, 10.0, 0.05);
  }
  EXPECT_TRUE(std::isfinite(std::abs(symbol_q_regularized({1.0, 0.0, 0.0}, 2, 0.5, Sign::plus, 1e-3))));
}

TEST(Spectral, RegularisedSymbolIsTheDampedKernelTransform) {
  // sign +: the kernel damped by e^{-eps y_n}; in n = 1 this is the
  // transform of s^{a-1} e^{-eps s} / Gamma(a), i.e. (eps - i xi)^{-a}
  const double eps = 0.3;
  const double a = 0.5;
  const double xi = 0.8;
  const cplx ref = std::pow(cplx(eps, -xi), -a);
  EXPECT_LT(std::abs(symbol_q_regularized({xi, 0, 0}, 1, a, Sign::plus, eps) - ref), 1e-14);
}

TEST(Spectral, PlaneWarningAndMassFraction) {
  std::vector<std::string> seen;
  const auto old = set_warning_handler([&](std::string_view m) { seen.emplace_back(m); });
  const Grid g(GridSpec::cube(2, 8.0, 32));
  ApplyReport rep;
  apply_multiplier(TestFunction::unit_gaussian(2), make_multiplier(g, 0.5, Sign::plus), &rep);
  EXPECT_TRUE(rep.warned);
  EXPECT_GT(rep.plane_mass_fraction, kPlaneMassTolerance);
  EXPECT_EQ(seen.size(), 1u);
  ApplyReport quiet;
  apply_multiplier(TestFunction::phi_moment(2), make_multiplier(g, 0.5, Sign::plus), &quiet);
  EXPECT_FALSE(quiet.warned);
  EXPECT_LT(quiet.plane_mass_fraction, kPlaneMassTolerance);
  EXPECT_EQ(seen.size(), 1u);
  set_warning_handler(old);
}

TEST(Spectral, PoliciesAgreeOnWellSeparatedSpectra) {
  // the two lattices see different periodic images, so compare away from the box edge
  const Grid g(GridSpec::cube(2, 8.0, 128));
  const SampledField f = sample(TestFunction::phi_class(2, {}, {1.0, 1.0}, 8.0), g);
  const SampledField a = spectral_fracint(f, 0.5, Sign::plus, false, SingularPolicy::zero_fill);
  const SampledField b = spectral_fracint(f, 0.5, Sign::plus, false, SingularPolicy::half_shift);
  EXPECT_LT(relative_l2_error(restrict_to(a, g.interior()), restrict_to(b, g.interior())), 1e-8);
  EXPECT_EQ(parse_policy("half_shift"), SingularPolicy::half_shift);
  EXPECT_THROW(parse_policy("nearest"), Error);
}

TEST(Spectral, RieszPotentialOfOrderZeroIsIdentity) {
  const Grid g(GridSpec::cube(2, 6.0, 32));
  const SampledField f = sample(TestFunction::unit_gaussian(2), g);
  EXPECT_LT(relative_l2_error(riesz_potential_n(f, 0.0), f), 1e-14);
}

TEST(Spectral, RieszTypeCombinations) {
  const Point xi{0.9, -1.4, 0.0};
  const FracOrder a(0.4, 0.2);
  const cplx qp = symbol_q(xi, 2, a, Sign::plus);
  const cplx qm = symbol_q(xi, 2, a, Sign::minus);
  const cplx av = a.value();
  EXPECT_LT(std::abs(symbol_riesz_type(xi, 2, a, RieszKind::even) -
                     (qp + qm) / (2.0 * std::cos(av * kPi / 2.0))),
            1e-14);
  EXPECT_LT(std::abs(symbol_riesz_type(xi, 2, a, RieszKind::odd) -
                     (qp - qm) / (cplx(0, 2) * std::sin(av * kPi / 2.0))),
            1e-14);
  EXPECT_THROW(symbol_riesz_type(xi, 2, 1.0, RieszKind::even), Error);
}

TEST(Spectral, MultiplierMatchesQuadratureOnSeparatedSpectrum) {
  const TestFunction f = TestFunction::phi_class(2, {}, {1.0, 1.0}, 8.0);
  const Grid g(GridSpec::cube(2, 8.0, 128));
  // the minus-sign quadrature follows the parabola across the whole support
  // box, so it is checked on a smaller window of the same lattice
  const Grid plus_window = g.interior();
  const Grid minus_window(GridSpec::cube(2, 1.0, 16));
  for (Sign s : {Sign::plus, Sign::minus}) {
    const Grid& w = s == Sign::plus ? plus_window : minus_window;
    const SampledField spec = restrict_to(apply_multiplier(f, make_multiplier(g, 1.0, s)), w);
    const SampledField quad = parabolic_fracint(f, 1.0, s, w);
    EXPECT_LT(relative_l2_error(quad, spec), 1e-10) << to_string(s);
  }
}
