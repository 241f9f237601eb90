#include "pararadon/transversal.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "pararadon/spatial.hpp"

namespace pararadon {

namespace {

double sq_prime(const Point& x, int n) {
  double r = 0.0;
  for (int i = 0; i + 1 < n; ++i) r += x[i] * x[i];
  return r;
}

// min and max of |x'|^2 over the box  lo' <= x' <= hi'
std::pair<double, double> square_range(const std::array<double, kMaxDim>& lo,
                                       const std::array<double, kMaxDim>& hi, int n) {
  double mn = 0.0;
  double mx = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    const double d = lo[i] > 0.0 ? lo[i] : (hi[i] < 0.0 ? -hi[i] : 0.0);
    mn += d * d;
    mx += std::max(lo[i] * lo[i], hi[i] * hi[i]);
  }
  return {mn, mx};
}

std::vector<Point> mapped_nodes(const Grid& out, const std::function<Point(const Point&)>& map) {
  std::vector<Point> xs(out.size());
  for (std::size_t j = 0; j < out.size(); ++j) xs[j] = map(out.node(j));
  return xs;
}

}  // namespace

SampledField transversal_radon(const PointFunction& f, const Grid& out,
                               const QuadratureConfig& config) {
  return LayeredIntegral(Surface::transversal, std::nullopt, Sign::plus, config).on_grid(f, out);
}

SampledField transversal_radon(const TestFunction& f, const Grid& out,
                               const QuadratureConfig& config) {
  return transversal_radon(f.as_point_function(config.support_tol), out, config);
}

SampledField transversal_fracint(const PointFunction& f, FracOrder alpha, Sign sign,
                                 const Grid& out, const QuadratureConfig& config) {
  return LayeredIntegral(Surface::transversal, alpha, sign, config).on_grid(f, out);
}

SampledField transversal_fracint(const TestFunction& f, FracOrder alpha, Sign sign,
                                 const Grid& out, const QuadratureConfig& config) {
  return transversal_fracint(f.as_point_function(config.support_tol), alpha, sign, out, config);
}

const char* to_string(Shear s) {
  switch (s) {
    case Shear::B1: return "B1";
    case Shear::B2: return "B2";
    case Shear::B1_inv: return "B1_inv";
    case Shear::B2_inv: return "B2_inv";
  }
  return "?";
}

Point shear_source(Shear which, const Point& x, int n) {
  Point z = x;
  const int last = n - 1;
  const double r = sq_prime(x, n);
  switch (which) {
    case Shear::B1:
      z[last] = x[last] - r;
      break;
    case Shear::B2:
      for (int i = 0; i < last; ++i) z[i] = 2.0 * x[i];
      z[last] = x[last] - r;
      break;
    case Shear::B1_inv:
      z[last] = x[last] + r;
      break;
    case Shear::B2_inv:
      for (int i = 0; i < last; ++i) z[i] = 0.5 * x[i];
      z[last] = x[last] + 0.25 * r;
      break;
  }
  return z;
}

PointFunction parabola_shear(const PointFunction& f, Shear which) {
  const int n = f.dim();
  const int last = n - 1;
  const Box& b = f.support();
  Box out = b;
  // x' range of the result, then the x_n range it induces
  const double scale = which == Shear::B2 ? 0.5 : (which == Shear::B2_inv ? 2.0 : 1.0);
  for (int i = 0; i < last; ++i) {
    out.lo[i] = b.lo[i] * scale;
    out.hi[i] = b.hi[i] * scale;
  }
  auto [mn, mx] = square_range(out.lo, out.hi, n);
  if (which == Shear::B2_inv) {
    mn *= 0.25;
    mx *= 0.25;
  }
  if (which == Shear::B1 || which == Shear::B2) {
    out.lo[last] = b.lo[last] + mn;
    out.hi[last] = b.hi[last] + mx;
  } else {
    out.lo[last] = b.lo[last] - mx;
    out.hi[last] = b.hi[last] - mn;
  }
  return {n, [f, which, n](const Point& x) { return f(shear_source(which, x, n)); }, out};
}

PointFunction parabola_shear(const TestFunction& f, Shear which, double rel_tol) {
  return parabola_shear(f.as_point_function(rel_tol), which);
}

SampledField parabola_shear(const SampledField& f, Shear which, const Grid& out) {
  const PointFunction g = parabola_shear(interpolate(f), which);
  return sample(g, out);
}

Point Dilation::b_source(const Point& x, int n) const {
  Point z = x;
  for (int i = 0; i + 1 < n; ++i) z[i] = (l2 / l1) * x[i];
  z[n - 1] = l2 * x[n - 1];
  return z;
}

cplx Dilation::b_factor(int n, FracOrder alpha) const {
  return std::pow(l1, 1.0 - n) * std::exp(-alpha.value() * std::log(l2));
}

SampledField dilated_transversal_fracint(const TestFunction& f, FracOrder alpha, Sign sign,
                                         const Dilation& d, const Grid& out,
                                         const QuadratureConfig& config) {
  const int n = out.dim();
  const LayeredIntegral op(Surface::transversal, alpha, sign, config);
  const auto xs = mapped_nodes(out, [&](const Point& x) { return d.b_source(x, n); });
  std::vector<cplx> v = op.at(f.as_point_function(config.support_tol), xs);
  const cplx c = d.b_factor(n, alpha);
  for (auto& e : v) e *= c;
  return {out, Domain::space, std::move(v)};
}

SampledField conjugated_fracint(const TestFunction& f, FracOrder alpha, Sign sign,
                                const Grid& out, const QuadratureConfig& config) {
  const int n = out.dim();
  const PointFunction b1f = parabola_shear(f, Shear::B1, config.support_tol);
  const LayeredIntegral op(Surface::transversal, alpha, sign, config);
  const auto xs = mapped_nodes(out, [&](const Point& x) { return shear_source(Shear::B2, x, n); });
  return {out, Domain::space, op.at(b1f, xs)};
}

ResidualReport conjugation_residual(const TestFunction& f, FracOrder alpha, Sign sign,
                                    const Grid& out, const QuadratureConfig& config,
                                    double tolerance) {
  const auto t0 = std::chrono::steady_clock::now();
  const SampledField direct = parabolic_fracint(f, alpha, sign, out, config);
  const SampledField conj = conjugated_fracint(f, alpha, sign, out, config);
  std::ostringstream name;
  name << "conjugation[alpha=" << alpha.re();
  if (alpha.im() != 0.0) name << (alpha.im() > 0 ? "+" : "") << alpha.im() << "i";
  name << "," << to_string(sign) << "]";
  ResidualReport r = compare_fields(name.str(), conj, direct, tolerance);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace pararadon
