#pragma once

#include "pararadon/layered.hpp"
#include "pararadon/residual.hpp"
#include "pararadon/test_function.hpp"

namespace pararadon {

/// (T f)(x) = \int f(y', x_n + x'.y') dy'
SampledField transversal_radon(const PointFunction& f, const Grid& out,
                               const QuadratureConfig& config = {});
SampledField transversal_radon(const TestFunction& f, const Grid& out,
                               const QuadratureConfig& config = {});

/// T^alpha_+- f = Gamma(alpha)^{-1} \int_0^inf s^{alpha-1} \int f(y', x_n -+ s + x'.y') dy' ds,
/// Re alpha > 0.
SampledField transversal_fracint(const PointFunction& f, FracOrder alpha, Sign sign,
                                 const Grid& out, const QuadratureConfig& config = {});
SampledField transversal_fracint(const TestFunction& f, FracOrder alpha, Sign sign,
                                 const Grid& out, const QuadratureConfig& config = {});

/// The shears
///   B1 f(x)     = f(x', x_n - |x'|^2)
///   B2 F(x)     = F(2x', x_n - |x'|^2)
///   B1_inv u(x) = u(x', x_n + |x'|^2)
///   B2_inv v(x) = v(x'/2, x_n + |x'|^2/4)
enum class Shear { B1, B2, B1_inv, B2_inv };

const char* to_string(Shear s);

/// The point at which the sheared function reads its argument.
Point shear_source(Shear which, const Point& x, int n);

/// Exact composition; the support box is mapped along.
PointFunction parabola_shear(const PointFunction& f, Shear which);
PointFunction parabola_shear(const TestFunction& f, Shear which, double rel_tol = 1e-16);

/// Sampled fallback: the cubic interpolant of f is sheared and sampled on
/// `out`. Nodes whose source point falls outside f's grid box are set to 0.
SampledField parabola_shear(const SampledField& f, Shear which, const Grid& out);

/// The anisotropic dilations
///   (A f)(x) = f(l1 x', l2 x_n)
///   (B F)(x) = l1^{1-n} l2^{-alpha} F((l2/l1) x', l2 x_n)
/// which satisfy T^alpha A = B T^alpha.
struct Dilation {
  double l1 = 1.0;
  double l2 = 1.0;

  [[nodiscard]] TestFunction apply_a(const TestFunction& f) const { return f.dilated(l1, l2); }
  [[nodiscard]] Point b_source(const Point& x, int n) const;
  [[nodiscard]] cplx b_factor(int n, FracOrder alpha) const;
};

/// B applied to T^alpha_+- f on `out`: the operator is evaluated at the
/// B-source points directly, no interpolation.
SampledField dilated_transversal_fracint(const TestFunction& f, FracOrder alpha, Sign sign,
                                         const Dilation& d, const Grid& out,
                                         const QuadratureConfig& config = {});

/// B2 T^alpha_+- B1 f evaluated on `out` (T^alpha is evaluated at the B2
/// source points, so nothing is interpolated).
SampledField conjugated_fracint(const TestFunction& f, FracOrder alpha, Sign sign,
                                const Grid& out, const QuadratureConfig& config = {});

/// Relative L2 difference between P^alpha_+- f and B2 T^alpha_+- B1 f on `out`.
ResidualReport conjugation_residual(const TestFunction& f, FracOrder alpha, Sign sign,
                                    const Grid& out, const QuadratureConfig& config = {},
                                    double tolerance = 1e-4);

}  // namespace pararadon
