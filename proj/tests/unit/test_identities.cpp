#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "pararadon/identities.hpp"

using namespace pararadon;

namespace {
const TestFunction kPhi = TestFunction::phi_class(2, {}, {1.0, 1.0}, 6.0);
const TestFunction kOffset = TestFunction::gaussian(2, {0.3, -0.2}, {0.8, 0.6});
}  // namespace

TEST(Identities, SymbolAlgebra) {
  const GridSpec g = GridSpec::cube(3, 4.0, 16);
  for (Sign s : {Sign::plus, Sign::minus}) {
    EXPECT_TRUE(check_multiplier_product(g, FracOrder(0.3, -1.0), FracOrder(-1.2, 0.4), s).pass);
    EXPECT_TRUE(check_symbol_ladder(g, FracOrder(0.5, 2.0), 3, s).pass);
    EXPECT_TRUE(check_symbol_semigroup(g, FracOrder(-0.7), FracOrder(2.0, 1.0), s).pass);
  }
}

TEST(Identities, UnitaryAtTheLeftEdge) {
  const GridSpec g = GridSpec::cube(2, 8.0, 64);
  const ResidualReport r = check_unitary(kPhi, 0.0, Sign::plus, g);
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.rel_l2, 1e-12);
  // with gamma != 0 the ratio stays below e^{pi |gamma| / 2}
  EXPECT_TRUE(check_unitary(kPhi, 1.0, Sign::minus, g).pass);
}

TEST(Identities, ZeroInputIsHandled) {
  const TestFunction zero = kPhi.scaled(0.0);
  const GridSpec g = GridSpec::cube(2, 8.0, 32);
  const ResidualReport u = check_unitary(zero, 0.0, Sign::plus, g);
  EXPECT_TRUE(std::isfinite(u.rel_l2));
  const ResidualReport c = check_composition_riesz(zero, 0.5, Sign::plus, g);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.rel_l2, 0.0);
}

TEST(Identities, NonFiniteResidualFails) {
  ResidualReport r;
  r.tolerance = 1.0;
  r.rel_l2 = std::numeric_limits<double>::quiet_NaN();
  finalize(r);
  EXPECT_FALSE(r.pass);
  r.rel_l2 = 0.5;
  r.max_abs = std::numeric_limits<double>::infinity();
  finalize(r);
  EXPECT_FALSE(r.pass);
  r.max_abs = 0.1;
  finalize(r);
  EXPECT_TRUE(r.pass);
}

TEST(Identities, CompositionWithRieszPotential) {
  const GridSpec g = GridSpec::cube(2, 8.0, 64);
  for (FracOrder a : {FracOrder(0.0), FracOrder(0.5), FracOrder(0.2, 0.7)}) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      EXPECT_TRUE(check_composition_riesz(kPhi, a, s, g).pass) << a.re() << " " << to_string(s);
    }
  }
}

TEST(Identities, Duality) {
  const ResidualReport r = check_duality(kOffset, TestFunction::unit_gaussian(2), 0.5, Sign::plus,
                                         GridSpec::cube(2, 6.0, 48));
  EXPECT_TRUE(r.pass) << r.rel_l2;
  EXPECT_EQ(r.name, "duality[alpha=0.5,+]");
}

TEST(Identities, SemigroupWithZeroStepIsExact) {
  const ResidualReport r =
      check_semigroup(kOffset, 0.5, FracOrder{}, Sign::plus, ColumnGrids::standard(2));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.rel_l2, 0.0);
}

TEST(Identities, SemigroupAndFactorization) {
  const ColumnGrids cols = ColumnGrids::standard(2);
  EXPECT_TRUE(check_semigroup(kOffset, 0.5, 1.0, Sign::plus, cols).pass);
  EXPECT_TRUE(check_factorization(kOffset, 1.0, Sign::plus, cols).pass);
}

TEST(Identities, DerivativeLadder) {
  const GridSpec g = GridSpec::cube(2, 6.0, 96);
  const ResidualReport zero = check_derivative_ladder(kPhi, 1.0, 0, Sign::plus, g);
  EXPECT_TRUE(zero.pass) << zero.rel_l2;
  EXPECT_TRUE(check_derivative_ladder(kPhi, 1.5, 1, Sign::plus, g).pass);
  const ResidualReport minus = check_derivative_ladder(kPhi, 1.5, 1, Sign::minus, GridSpec::cube(2, 6.0, 48));
  EXPECT_TRUE(minus.pass) << minus.rel_l2;
  EXPECT_THROW(check_derivative_ladder(kPhi, 1.0, -1, Sign::plus, g), Error);
}

TEST(Identities, LimitSequenceIsRecorded) {
  std::vector<double> e;
  const ResidualReport r =
      check_limit_alpha_zero(TestFunction::unit_gaussian(2), {0.2, 0.1}, Sign::plus, false,
                             GridSpec::cube(2, 4.0, 16), {}, 0.5, &e);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_LT(e[1], e[0]);
  EXPECT_NEAR(e[1] / e[0], 0.5, 0.05);
  EXPECT_TRUE(r.pass);
  EXPECT_THROW(check_limit_alpha_zero(kPhi, {0.1, 0.2}, Sign::plus, false,
                                      GridSpec::cube(2, 4.0, 16)),
               Error);
  EXPECT_THROW(check_limit_alpha_zero(kPhi, {}, Sign::plus, false, GridSpec::cube(2, 4.0, 16)),
               Error);
}
