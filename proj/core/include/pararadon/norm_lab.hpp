#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "pararadon/residual.hpp"
#include "pararadon/spatial.hpp"
#include "pararadon/transversal.hpp"

namespace pararadon {

/// (p, q) on the line p = (n+1)/(n+alpha0), q = (n+1)/(1-alpha0).
/// The formula values are stored for every alpha0 (q = inf at alpha0 = 1);
/// admissible is set when (1-n)/2 <= alpha0 <= 1.
struct ExponentPair {
  double p = 1.0;
  double q = 1.0;
  double alpha0 = 0.0;
  int n = 2;
  bool admissible = false;
};

ExponentPair admissible_exponents(double alpha0, int n);

/// A fraction num/den in lowest terms, den > 0.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  [[nodiscard]] double value() const { return double(num) / double(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// 1/p and 1/q of the admissible pair for a rational alpha0, exactly.
std::array<Fraction, 2> admissible_inverse_exponents(Fraction alpha0, int n);

/// Scaling exponents of ||T^alpha A_lambda f||_q / ||A_lambda f||_p in
/// lambda1 and lambda2:
///   e1 = 1 - n + (n-1)/q - (1-n)/p
///   e2 = -alpha0 - n/q + 1/p
/// The exact form takes 1/p and 1/q.
std::array<double, 2> predicted_slopes(double alpha0, double p, double q, int n);
std::array<Fraction, 2> predicted_slopes_exact(Fraction alpha0, Fraction p_inv, Fraction q_inv,
                                               int n);

/// A point z of the closed strip 0 <= Re z <= 1.
struct StripPoint {
  cplx z;
  [[nodiscard]] double theta() const { return z.real(); }
};

/// alpha(z) = ((1+n)/2) z + (1-n)/2. Throws Error off the strip.
FracOrder alpha_on_strip(StripPoint z, int n);

/// M_theta = exp{ sin(pi theta)/2 * \int [ log M0(g) / (cosh(pi g) - cos(pi theta))
///                                       + log M1(g) / (cosh(pi g) + cos(pi theta)) ] dg }
/// by adaptive Gauss-Kronrod quadrature; the line is cut where the integrand
/// stays below 1e-16. Throws Error for theta outside (0, 1) or a
/// non-positive M value.
double interpolation_constant(double theta, const std::function<double(double)>& m0,
                              const std::function<double(double)>& m1);

/// 1 / |Gamma(1 + i gamma)|.
double gamma_modulus_bound(double gamma);

/// ||P^{1+i gamma}_+- f||_inf on `grid` by quadrature against
/// e^{pi |gamma|/2} ||f||_1 (Riemann sum on the same grid). The reported
/// error is max(0, sup/bound - 1), so the check passes when
/// sup <= bound (1 + tolerance).
ResidualReport l1_linf_bound_check(const TestFunction& f, double gamma, Sign sign,
                                   const GridSpec& grid, const QuadratureConfig& config = {},
                                   double tolerance = 1e-3);

struct SlopeRow {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double lp_in = 0.0;    ///< ||A_lambda f||_p
  double lq_out = 0.0;   ///< ||T^alpha A_lambda f||_q
  double ratio = 0.0;
  double log_ratio = 0.0;
};

struct SlopeReport {
  FracOrder alpha;
  int n = 2;
  double p = 1.0;
  double q = 1.0;
  std::array<double, 2> fitted{};     ///< OLS slopes of log ratio in log lambda1, log lambda2
  std::array<double, 2> predicted{};
  double intercept = 0.0;
  double fit_rms = 0.0;               ///< root mean square residual of the fit
  std::vector<SlopeRow> rows;
  double seconds = 0.0;

  [[nodiscard]] double max_slope_error() const;
};

struct SlopeSetup {
  /// Fixed Gaussian input.
  TestFunction f = TestFunction::unit_gaussian(2);
  /// Output grid at lambda = (1, 1). At lambda the half extents become
  /// (lambda1/lambda2) L' and L_n/lambda2, N unchanged.
  GridSpec out = GridSpec::cube(2, 4.0, 16);
  /// Grid on which ||f||_p is summed at lambda = (1, 1); at lambda the half
  /// extents become L'/lambda1 and L_n/lambda2.
  GridSpec in = GridSpec::cube(2, 6.0, 96);
  Sign sign = Sign::plus;
  QuadratureConfig config{};
};

/// Default lambda values {1/4, 1/2, 1, 2, 4}.
std::vector<double> default_lambdas();

/// R(l1, l2) = ||T^alpha A_lambda f||_q / ||A_lambda f||_p over the product
/// lambda_grid x lambda_grid, with T^alpha evaluated by quadrature on the
/// dilated Gaussian (alpha = 0 uses the transversal Radon transform), then
/// an OLS fit of log R. Throws Error for fewer than 3 lambda values,
/// Re alpha < 0, or p, q < 1.
SlopeReport scaling_slope_experiment(FracOrder alpha, double p, double q,
                                     const std::vector<double>& lambda_grid,
                                     const SlopeSetup& setup = {});

/// CSV with header lambda1,lambda2,lp_in,lq_out,ratio,log_ratio,predicted_e1,predicted_e2.
void write_slope_csv(std::ostream& os, const std::vector<SlopeReport>& reports);

}  // namespace pararadon
