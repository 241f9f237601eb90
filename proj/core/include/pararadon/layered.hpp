#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pararadon/point_function.hpp"
#include "pararadon/quadrature.hpp"

namespace pararadon {

/// The family of (n-1)-dimensional surfaces integrated over by the inner
/// layer. For a point x, a shift s >= 0 and the sign sigma = +-1 the
/// integrand is f evaluated at
///
///   paraboloid:       (x' - y', x_n - |y'|^2 - sigma s)
///   dual_paraboloid:  (x' - y', x_n + |y'|^2 - sigma s)
///   transversal:      (y',      x_n + x'.y' - sigma s)
///   line:             (x',      x_n - sigma s)            (no inner integral)
enum class Surface { paraboloid, dual_paraboloid, transversal, line };

/// Evaluates
///
///   Gamma(alpha)^{-1} \int_0^inf s^{alpha-1} A_x(s) ds,   A_x(s) = \int f(z(x, y', s)) dy',
///
/// or A_x(0) alone when no order is given. The outer integral uses QuadRule,
/// the inner one a trapezoid rule restricted to the part of the surface that
/// meets the support box of f. On the paraboloids the trapezoid runs in the
/// arclength variable of t -> (t, t^2), so the spacing along the surface is
/// uniform however steep it gets; on the transversal surfaces the step along
/// axis i is inner_step / max(1, |x_i|).
class LayeredIntegral {
 public:
  LayeredIntegral(Surface surface, std::optional<FracOrder> alpha, Sign sign,
                  QuadratureConfig config = {});

  [[nodiscard]] Surface surface() const { return surface_; }
  [[nodiscard]] const std::optional<FracOrder>& order() const { return alpha_; }
  [[nodiscard]] Sign sign() const { return sign_; }
  [[nodiscard]] const QuadratureConfig& config() const { return config_; }

  /// Values at arbitrary points; output order follows the input.
  [[nodiscard]] std::vector<cplx> at(const PointFunction& f, std::span<const Point> xs) const;
  [[nodiscard]] cplx at(const PointFunction& f, const Point& x) const;
  /// Values on every node of a grid.
  [[nodiscard]] SampledField on_grid(const PointFunction& f, const Grid& out) const;

 private:
  Surface surface_;
  std::optional<FracOrder> alpha_;
  Sign sign_;
  QuadratureConfig config_;
  std::optional<QuadRule> rule_;
  cplx norm_ = 1.0;
};

}  // namespace pararadon
