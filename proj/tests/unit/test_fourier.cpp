#include <gtest/gtest.h>

#include "pararadon/derivative.hpp"
#include "pararadon/fourier.hpp"
#include "pararadon/norms.hpp"
#include "pararadon/test_function.hpp"

using namespace pararadon;

TEST(Fourier, GaussianTransform) {
  // \int e^{-|x|^2} e^{i x.xi} dx = pi e^{-|xi|^2/4} in two variables
  const Grid g(GridSpec::cube(2, 8.0, 64));
  const SampledField F = fourier_forward(sample(TestFunction::unit_gaussian(2), g));
  double worst = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const Point xi = g.frequency(j);
    const double ref = kPi * std::exp(-(xi[0] * xi[0] + xi[1] * xi[1]) / 4.0);
    worst = std::max(worst, std::abs(F[j] - ref));
  }
  EXPECT_LT(worst, 1e-13);
  EXPECT_EQ(F.tag(), Domain::frequency);
}

TEST(Fourier, KernelSignFollowsModulation) {
  // e^{i k x} shifts the spectrum to xi = -k under the e^{+i x xi} kernel
  const Grid g(GridSpec::cube(2, 8.0, 64));
  const TestFunction f = TestFunction::phi_class(2, {}, {1.0, 1.0}, 2.0 * kPi);
  const SampledField F = fourier_forward(sample(f, g));
  std::size_t arg = 0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (std::abs(F[j]) > std::abs(F[arg])) arg = j;
  }
  EXPECT_NEAR(g.frequency(arg)[1], -2.0 * kPi, 1e-12);
  EXPECT_NEAR(g.frequency(arg)[0], 0.0, 1e-12);
}

TEST(Fourier, InverseAndParseval) {
  const Grid g(GridSpec::cube(3, 6.0, 16));
  const TestFunction f = TestFunction::hermite_gaussian(3, {0.3, -0.1, 0.2}, {1.0, 0.8, 1.2}, {1, 0, 2});
  const SampledField s = sample(f, g);
  const SampledField F = fourier_forward(s);
  EXPECT_LT(relative_l2_error(fourier_inverse(F), s), 1e-14);
  double fs = 0.0;
  double Fs = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    fs += std::norm(s[j]);
    Fs += std::norm(F[j]);
  }
  EXPECT_NEAR(Fs * g.freq_cell_volume(), std::pow(2 * kPi, 3) * fs * g.cell_volume(),
              1e-12 * Fs * g.freq_cell_volume());
}

TEST(Fourier, MatchesClosedFormSpectrum) {
  const Grid g(GridSpec::cube(2, 10.0, 128));
  const TestFunction f = TestFunction::phi_class(2, {0.4, -0.3}, {0.9, 1.1}, 7.0, 1);
  const SampledField F = fourier_forward(sample(f, g));
  EXPECT_LT(relative_l2_error(F, sample_spectrum(f, g)), 1e-12);
}

TEST(Derivative, SpectralAndFiniteDifference) {
  const Grid g(GridSpec::cube(2, 8.0, 128));
  const TestFunction f = TestFunction::gaussian(2, {0.2, -0.4}, {0.9, 0.7});
  const SampledField exact = sample(f.derivative_n(2), g);
  const SampledField s = sample(f, g);
  EXPECT_LT(relative_l2_error(partial_derivative_n(s, 2), exact), 1e-12);
  const Grid in = g.interior();
  EXPECT_LT(relative_l2_error(restrict_to(partial_derivative_n(s, 2, DerivativeMethod::finite_difference), in),
                              restrict_to(exact, in)),
            1e-3);
}
