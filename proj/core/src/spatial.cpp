#include "pararadon/spatial.hpp"

#include <cmath>

namespace pararadon {

namespace {

PointFunction closed_form(const TestFunction& f, const QuadratureConfig& config) {
  return f.as_point_function(config.support_tol);
}

SampledField negate_points(const LayeredIntegral& op, const PointFunction& f, const Grid& out) {
  std::vector<Point> xs(out.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    xs[j] = out.node(j);
    for (int i = 0; i < out.dim(); ++i) xs[j][i] = -xs[j][i];
  }
  return {out, Domain::space, op.at(f, xs)};
}

// `out` extended by `pad` nodes at both ends of the last axis.
Grid padded_last_axis(const Grid& out, int pad) {
  GridSpec spec = out.spec();
  const int last = spec.dim - 1;
  spec.half_extent[last] += pad * out.spacing(last);
  spec.points[last] += 2 * pad;
  return Grid(spec);
}

}  // namespace

SampledField riemann_liouville_1d(const PointFunction& f, FracOrder beta, Sign sign,
                                  const Grid& out, const QuadratureConfig& config) {
  return LayeredIntegral(Surface::line, beta, sign, config).on_grid(f, out);
}

SampledField riemann_liouville_1d(const SampledField& f, FracOrder beta, Sign sign,
                                  const QuadratureConfig& config) {
  return riemann_liouville_1d(interpolate(f), beta, sign, f.grid(), config);
}

SampledField parabolic_radon(const PointFunction& f, const Grid& out,
                             const QuadratureConfig& config) {
  return LayeredIntegral(Surface::paraboloid, std::nullopt, Sign::plus, config).on_grid(f, out);
}

SampledField parabolic_radon(const TestFunction& f, const Grid& out,
                             const QuadratureConfig& config) {
  return parabolic_radon(closed_form(f, config), out, config);
}

SampledField parabolic_radon(const SampledField& f, const Grid& out,
                             const QuadratureConfig& config) {
  return parabolic_radon(interpolate(f), out, config);
}

SampledField dual_parabolic_radon(const PointFunction& f, const Grid& out,
                                  const QuadratureConfig& config) {
  return LayeredIntegral(Surface::dual_paraboloid, std::nullopt, Sign::plus, config)
      .on_grid(f, out);
}

SampledField dual_parabolic_radon(const TestFunction& f, const Grid& out,
                                  const QuadratureConfig& config) {
  return dual_parabolic_radon(closed_form(f, config), out, config);
}

SampledField parabolic_fracint(const PointFunction& f, FracOrder alpha, Sign sign,
                               const Grid& out, const QuadratureConfig& config) {
  return LayeredIntegral(Surface::paraboloid, alpha, sign, config).on_grid(f, out);
}

SampledField parabolic_fracint(const TestFunction& f, FracOrder alpha, Sign sign,
                               const Grid& out, const QuadratureConfig& config) {
  return parabolic_fracint(closed_form(f, config), alpha, sign, out, config);
}

SampledField parabolic_fracint(const SampledField& f, FracOrder alpha, Sign sign,
                               const Grid& out, const QuadratureConfig& config) {
  return parabolic_fracint(interpolate(f), alpha, sign, out, config);
}

int ladder_shift(FracOrder alpha) {
  if (alpha.alpha0 >= 0.5) return 0;
  return static_cast<int>(std::ceil(0.5 - alpha.alpha0));
}

SampledField parabolic_fracint_cont(const TestFunction& f, FracOrder alpha, Sign sign,
                                    const Grid& out, const QuadratureConfig& config,
                                    const LadderOptions& options) {
  const int k = options.shift.value_or(ladder_shift(alpha));
  if (k < 0) throw Error("parabolic_fracint_cont: negative shift");
  const FracOrder shifted{alpha.alpha0 + k, alpha.gamma};
  if (!(shifted.alpha0 > 0.0)) throw Error("parabolic_fracint_cont: Re alpha + k must be positive");
  if (k == 0) return parabolic_fracint(f, alpha, sign, out, config);
  const double factor = (sign == Sign::minus && k % 2 != 0) ? -1.0 : 1.0;

  switch (options.derivative) {
    case LadderDerivative::analytic:
      return parabolic_fracint(f.derivative_n(k).scaled(factor), shifted, sign, out, config);
    case LadderDerivative::spectral: {
      const SampledField g = parabolic_fracint(f, shifted, sign, out, config);
      return factor * partial_derivative_n(g, k, DerivativeMethod::spectral);
    }
    case LadderDerivative::finite_difference: {
      // two stencil half-widths per derivative keep the box-edge error outside `out`
      const Grid wide = padded_last_axis(out, 2 * k + 2);
      const SampledField g = parabolic_fracint(f, shifted, sign, wide, config);
      return restrict_to(factor * partial_derivative_n(g, k, DerivativeMethod::finite_difference),
                         out);
    }
  }
  throw Error("parabolic_fracint_cont: unknown derivative method");
}

SampledField dual_parabolic_fracint(const TestFunction& f, FracOrder alpha, Sign sign,
                                    const Grid& out, const QuadratureConfig& config,
                                    const LadderOptions& options) {
  // (J P J f)(x) = (P Jf)(-x); the ladder is applied to Jf directly.
  const Sign other = opposite(sign);
  const int k = options.shift.value_or(ladder_shift(alpha));
  TestFunction g = f.reflected();
  FracOrder order = alpha;
  if (k > 0) {
    const double factor = (other == Sign::minus && k % 2 != 0) ? -1.0 : 1.0;
    g = g.derivative_n(k).scaled(factor);
    order = FracOrder{alpha.alpha0 + k, alpha.gamma};
  }
  if (!(order.alpha0 > 0.0)) throw Error("dual_parabolic_fracint: Re alpha + k must be positive");
  const LayeredIntegral op(Surface::paraboloid, order, other, config);
  return negate_points(op, closed_form(g, config), out);
}

cplx delta_pairing(const TestFunction& phi, const QuadratureConfig& config) {
  // P* at the origin reads phi(-y', |y'|^2); the lattice is symmetric in y'.
  const LayeredIntegral op(Surface::dual_paraboloid, std::nullopt, Sign::plus, config);
  return op.at(closed_form(phi, config), Point{0.0, 0.0, 0.0});
}

namespace {

cplx kernel_pairing_once(FracOrder alpha, Sign sign, const TestFunction& phi, int k,
                         const QuadratureConfig& config) {
  // <p, phi> = (P^alpha J phi)(0), and d^k J phi = (-1)^k J d^k phi
  TestFunction g = phi;
  if (k > 0) {
    const bool odd = k % 2 != 0;
    const double factor = (odd && sign == Sign::plus) ? -1.0 : 1.0;
    g = g.derivative_n(k).scaled(factor);
  }
  const FracOrder order{alpha.alpha0 + k, alpha.gamma};
  const LayeredIntegral op(Surface::paraboloid, order, sign, config);
  return op.at(closed_form(g.reflected(), config), Point{0.0, 0.0, 0.0});
}

}  // namespace

PairingResult kernel_pairing(FracOrder alpha, Sign sign, const TestFunction& phi,
                             const QuadratureConfig& config, double tol) {
  PairingResult r;
  r.shift = alpha.alpha0 > 0.0 ? 0 : ladder_shift(alpha);
  r.value = kernel_pairing_once(alpha, sign, phi, r.shift, config);
  const cplx fine = kernel_pairing_once(alpha, sign, phi, r.shift, config.refined());
  r.truncation_estimate = std::abs(fine - r.value);
  r.converged = std::isfinite(r.truncation_estimate) && r.truncation_estimate <= tol;
  return r;
}

}  // namespace pararadon
