#pragma once

#include <vector>

#include "pararadon/types.hpp"

namespace pararadon {

/// Nodes and weights of a real quadrature rule.
struct RealRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Jacobi rule for \int_{-1}^{1} f(x) (1-x)^a (1+x)^b dx, a, b > -1,
/// computed by Golub-Welsch on the Jacobi matrix.
RealRule gauss_jacobi(int count, double a, double b);

/// Gauss-Legendre rule on [-1, 1].
RealRule gauss_legendre(int count);

/// Tuning of the layered quadrature used by every spatial operator.
struct QuadratureConfig {
  int jacobi_nodes = 28;      ///< Gauss-Jacobi nodes on [0, split]
  double split = 1.0;         ///< s0: end of the singular panel
  int panel_nodes = 14;       ///< Gauss-Legendre nodes per tail panel
  double panel_width = 1.0;   ///< width of the tail panels on [s0, s_max]
  double inner_step = 0.06;   ///< trapezoid step of the inner (n-1)-dim integral
  double support_tol = 1e-16; ///< relative size below which the integrand is dropped

  /// Every node count doubled and every step halved.
  [[nodiscard]] QuadratureConfig refined() const;
};

/// The outer rule for \int_0^{s_max} s^{alpha-1} A(s) ds: Gauss-Jacobi with
/// weight exponent alpha0 - 1 on [0, s0] (for complex alpha the weights are
/// re-fitted to s^{alpha-1} on the same nodes), Gauss-Legendre panels on
/// [s0, s_max]. Weights are complex and
/// already include s^{alpha-1}; the 1/Gamma(alpha) normalisation is not.
class QuadRule {
 public:
  QuadRule(FracOrder alpha, const QuadratureConfig& config);

  [[nodiscard]] double jacobi_exponent() const { return alpha_.alpha0 - 1.0; }
  [[nodiscard]] const QuadratureConfig& config() const { return config_; }

  /// Fills nodes/weights for the integral over [0, s_hi], assuming the
  /// integrand vanishes on [0, s_lo). The singular head on [0, s0] is kept
  /// whenever s_lo < s0.
  void build(double s_lo, double s_hi, std::vector<double>& nodes,
             std::vector<cplx>& weights) const;

 private:
  FracOrder alpha_;
  QuadratureConfig config_;
  std::vector<double> head_nodes_;  // on [0, s0]
  std::vector<cplx> head_weights_;
  RealRule panel_;                  // reference rule on [-1, 1]
};

}  // namespace pararadon
