#pragma once

#include <vector>

#include "pararadon/residual.hpp"
#include "pararadon/spatial.hpp"
#include "pararadon/spectral.hpp"

namespace pararadon {

/// Default pass thresholds, one per kind of comparison.
struct Tolerances {
  double symbol = 1e-12;         ///< algebraic identities between symbols
  double same_fft = 1e-10;       ///< both sides through the same FFT path
  double quad_spectral = 1e-4;   ///< quadrature against the multiplier path
  double quad_quad = 1e-5;       ///< two independent quadratures
};

/// Grids used by the identities that need a 1-D integral along x_n of a
/// sampled intermediate: the intermediate lives on `column` (fine in x_n,
/// coarse in x'), the comparison on the aligned sub-grid `window`.
struct ColumnGrids {
  GridSpec column;
  GridSpec window;

  /// x' in [-1, 1) with 8 nodes; x_n in [-8, 8) with step 1/32 for the
  /// column, [-4, 4) for the window.
  static ColumnGrids standard(int n);
};

/// <P^alpha_+- f, phi> against <f, *P^alpha_-+ phi>, Riemann sums on `grid`.
ResidualReport check_duality(const TestFunction& f, const TestFunction& phi, FracOrder alpha,
                             Sign sign, const GridSpec& grid, const QuadratureConfig& config = {},
                             double tolerance = Tolerances{}.quad_quad);

/// P^alpha I^beta f against P^{alpha+beta} f. I^beta is applied (cubic
/// interpolation) to P^alpha f sampled on the column grid; the two
/// operators commute, so this is the same composition.
ResidualReport check_semigroup(const TestFunction& f, FracOrder alpha, FracOrder beta, Sign sign,
                               const ColumnGrids& grids, const QuadratureConfig& config = {},
                               double tolerance = Tolerances{}.quad_quad);

/// I^alpha P f against P^alpha f.
ResidualReport check_factorization(const TestFunction& f, FracOrder alpha, Sign sign,
                                   const ColumnGrids& grids, const QuadratureConfig& config = {},
                                   double tolerance = Tolerances{}.quad_quad);

/// *P^alpha_+- P^alpha_+- f against pi^{n-1} I_n^{2 alpha + n - 1} f, both
/// through the multipliers.
ResidualReport check_composition_riesz(const TestFunction& f, FracOrder alpha, Sign sign,
                                       const GridSpec& grid,
                                       SingularPolicy policy = SingularPolicy::zero_fill,
                                       double tolerance = Tolerances{}.same_fft);

/// ||pi^{(1-n)/2} P^{(1-n)/2 + i gamma} f||_2 / ||f||_2 through the multiplier.
/// For gamma = 0 the error is |ratio - 1|; otherwise it is the amount by
/// which the ratio exceeds e^{pi |gamma| / 2} (0 when the bound holds).
ResidualReport check_unitary(const TestFunction& f, double gamma, Sign sign,
                             const GridSpec& grid,
                             SingularPolicy policy = SingularPolicy::zero_fill,
                             double tolerance = Tolerances{}.same_fft);

/// (+-d_n)^ell P^alpha_+- f by quadrature (the derivative is moved onto f
/// exactly) against the multiplier q_{(alpha-ell)+-} applied to f, compared
/// on grid.interior() so the periodic FFT result is away from the box edge.
ResidualReport check_derivative_ladder(const TestFunction& f, FracOrder alpha, int ell, Sign sign,
                                       const GridSpec& grid, const QuadratureConfig& config = {},
                                       double tolerance = Tolerances{}.quad_spectral);

/// q*_{beta+-} q_{alpha+-} = pi^{n-1} |xi_n|^{-alpha-beta-n+1} e^{+-(alpha-beta) pi i/2 sgn xi_n}
/// at every node off the plane xi_n = 0. Errors are relative to |rhs|.
ResidualReport check_multiplier_product(const GridSpec& grid, FracOrder alpha, FracOrder beta,
                                        Sign sign, double tolerance = Tolerances{}.symbol);

/// q_{(alpha-ell)+-} = (-+i xi_n)^ell q_{alpha+-}, node by node.
ResidualReport check_symbol_ladder(const GridSpec& grid, FracOrder alpha, int ell, Sign sign,
                                   double tolerance = Tolerances{}.symbol);

/// q_{alpha+-} (-+i xi_n)^{-beta} = q_{(alpha+beta)+-}, node by node.
ResidualReport check_symbol_semigroup(const GridSpec& grid, FracOrder alpha, FracOrder beta,
                                      Sign sign, double tolerance = Tolerances{}.symbol);

/// Sup-norm errors e_k = ||P^{alpha_k} f - P f||_inf / ||P f||_inf (or the
/// dual operators) on `grid`, for a decreasing sequence alpha_k. The
/// reported error is e_last when the sequence e_k strictly decreases, and
/// otherwise the larger of e_last and the worst ratio e_{k+1}/e_k, so a
/// non-monotone run can never pass with a tolerance below 1.
ResidualReport check_limit_alpha_zero(const TestFunction& f, const std::vector<double>& alphas,
                                      Sign sign, bool dual, const GridSpec& grid,
                                      const QuadratureConfig& config = {},
                                      double tolerance = 5e-2,
                                      std::vector<double>* errors = nullptr);

}  // namespace pararadon
