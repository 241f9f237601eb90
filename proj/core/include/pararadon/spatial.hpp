#pragma once

#include <optional>

#include "pararadon/derivative.hpp"
#include "pararadon/layered.hpp"
#include "pararadon/test_function.hpp"

namespace pararadon {

/// One-dimensional Riemann-Liouville integral along x_n,
///
///   (I^beta_+- f)(x) = Gamma(beta)^{-1} \int_0^inf s^{beta-1} f(x', x_n -+ s) ds.
///
/// The sampled overload interpolates f (cubic) and returns values on the
/// same grid. Throws Error for Re beta <= 0.
SampledField riemann_liouville_1d(const SampledField& f, FracOrder beta, Sign sign,
                                  const QuadratureConfig& config = {});
SampledField riemann_liouville_1d(const PointFunction& f, FracOrder beta, Sign sign,
                                  const Grid& out, const QuadratureConfig& config = {});

/// (P f)(x) = \int f(x' - y', x_n - |y'|^2) dy'
SampledField parabolic_radon(const PointFunction& f, const Grid& out,
                             const QuadratureConfig& config = {});
SampledField parabolic_radon(const TestFunction& f, const Grid& out,
                             const QuadratureConfig& config = {});
SampledField parabolic_radon(const SampledField& f, const Grid& out,
                             const QuadratureConfig& config = {});

/// (P* f)(x) = \int f(x' - y', x_n + |y'|^2) dy'
SampledField dual_parabolic_radon(const PointFunction& f, const Grid& out,
                                  const QuadratureConfig& config = {});
SampledField dual_parabolic_radon(const TestFunction& f, const Grid& out,
                                  const QuadratureConfig& config = {});

/// P^alpha_+- f for Re alpha > 0 (throws Error otherwise).
SampledField parabolic_fracint(const PointFunction& f, FracOrder alpha, Sign sign,
                               const Grid& out, const QuadratureConfig& config = {});
SampledField parabolic_fracint(const TestFunction& f, FracOrder alpha, Sign sign,
                               const Grid& out, const QuadratureConfig& config = {});
SampledField parabolic_fracint(const SampledField& f, FracOrder alpha, Sign sign,
                               const Grid& out, const QuadratureConfig& config = {});

/// How d^k/dx_n^k is applied in the continuation ladder.
///   analytic:          to f, exactly (P^alpha f = (+-1)^k P^{alpha+k} d^k f)
///   spectral:          to the sampled P^{alpha+k} f via the FFT; needs a
///                      result that decays inside the output box
///   finite_difference: to the sampled P^{alpha+k} f, fourth-order stencils
enum class LadderDerivative { analytic, spectral, finite_difference };

struct LadderOptions {
  std::optional<int> shift;  ///< k; default ladder_shift(alpha)
  LadderDerivative derivative = LadderDerivative::analytic;
};

/// Smallest k >= 0 with Re alpha + k >= 1/2.
int ladder_shift(FracOrder alpha);

/// P^alpha_+- f for any complex alpha through the ladder
/// (+-1)^k d^k/dx_n^k P^{alpha+k} f. Throws Error if Re alpha + k <= 0.
SampledField parabolic_fracint_cont(const TestFunction& f, FracOrder alpha, Sign sign,
                                    const Grid& out, const QuadratureConfig& config = {},
                                    const LadderOptions& options = {});

/// *P^alpha_+- f = J P^alpha_-+ J f, for any alpha (ladder below Re alpha = 1/2).
SampledField dual_parabolic_fracint(const TestFunction& f, FracOrder alpha, Sign sign,
                                    const Grid& out, const QuadratureConfig& config = {},
                                    const LadderOptions& options = {});

/// <delta_P, phi> = \int phi(y', |y'|^2) dy'
cplx delta_pairing(const TestFunction& phi, const QuadratureConfig& config = {});

struct PairingResult {
  cplx value;
  /// |value - value at the refined configuration|
  double truncation_estimate = 0.0;
  bool converged = false;
  /// derivative shift used (0 for the direct integral)
  int shift = 0;
};

/// <p_{alpha+-}, phi> = \int p_{alpha+-}(y) phi(y) dy, the kernel of P^alpha_+-
/// paired with phi. Direct for Re alpha > 0, otherwise
/// (-+1)^k <p_{(alpha+k)+-}, d^k phi / dy_n^k>. The result is flagged as not
/// converged when the refined configuration moves it by more than tol.
PairingResult kernel_pairing(FracOrder alpha, Sign sign, const TestFunction& phi,
                             const QuadratureConfig& config = {}, double tol = 1e-6);

}  // namespace pararadon
