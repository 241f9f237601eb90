#include "pararadon/layered.hpp"

#include <algorithm>
#include <cmath>

#include "pararadon/parallel.hpp"
#include "pararadon/special.hpp"

namespace pararadon {

namespace {

// Arclength of t -> (t, t^2) from 0 to y.
double arclength(double y) {
  const double r = std::sqrt(1.0 + 4.0 * y * y);
  return 0.5 * y * r + 0.25 * std::asinh(2.0 * y);
}

// Trapezoid lattice uniform in arclength, covering [-ymax, ymax].
struct ArcLattice {
  std::vector<double> y;
  std::vector<double> w;

  ArcLattice(double ymax, double step) {
    const double tmax = arclength(ymax) + step;
    const int count = static_cast<int>(std::ceil(tmax / step));
    std::vector<double> half(count + 1);
    double guess = 0.0;
    for (int j = 0; j <= count; ++j) {
      const double t = j * step;
      for (int it = 0; it < 50; ++it) {
        const double delta = (arclength(guess) - t) / std::sqrt(1.0 + 4.0 * guess * guess);
        guess -= delta;
        if (std::abs(delta) < 1e-15 * (1.0 + std::abs(guess))) break;
      }
      half[j] = guess;
    }
    y.reserve(2 * count + 1);
    for (int j = count; j >= 1; --j) y.push_back(-half[j]);
    for (int j = 0; j <= count; ++j) y.push_back(half[j]);
    w.resize(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) w[j] = step / std::sqrt(1.0 + 4.0 * y[j] * y[j]);
  }

  // Index range of lattice points inside [a, b].
  [[nodiscard]] std::pair<std::size_t, std::size_t> range(double a, double b) const {
    if (!(b >= a)) return {0, 0};
    const auto lo = std::lower_bound(y.begin(), y.end(), a);
    const auto hi = std::upper_bound(lo, y.end(), b);
    return {static_cast<std::size_t>(lo - y.begin()), static_cast<std::size_t>(hi - y.begin())};
  }
};

// Calls visit(a, b) for the parts of {y in [a0, b0] : r_lo <= y^2 <= r_hi}.
template <class Visit>
void square_band(double r_lo, double r_hi, double a0, double b0, Visit&& visit) {
  if (r_hi < 0.0) return;
  const double outer = std::sqrt(r_hi);
  if (r_lo <= 0.0) {
    visit(std::max(a0, -outer), std::min(b0, outer));
    return;
  }
  const double inner = std::sqrt(r_lo);
  visit(std::max(a0, -outer), std::min(b0, -inner));
  visit(std::max(a0, inner), std::min(b0, outer));
}

// {y in [a0, b0] : c_lo <= k y <= c_hi}
std::pair<double, double> linear_band(double k, double c_lo, double c_hi, double a0, double b0) {
  if (k == 0.0) {
    if (c_lo <= 0.0 && 0.0 <= c_hi) return {a0, b0};
    return {1.0, 0.0};
  }
  double a = c_lo / k;
  double b = c_hi / k;
  if (a > b) std::swap(a, b);
  return {std::max(a0, a), std::min(b0, b)};
}

struct Inner {
  const PointFunction& f;
  Surface surface;
  int n;
  double inner_step;
  const ArcLattice* lattice;

  // A_x at the already shifted last coordinate zn0 = x_n - sigma s.
  cplx operator()(const Point& x, double zn0) const {
    const Box& box = f.support();
    const int last = n - 1;
    Point z{0.0, 0.0, 0.0};
    if (surface == Surface::line || n == 1) {
      for (int i = 0; i < last; ++i) {
        if (x[i] < box.lo[i] || x[i] > box.hi[i]) return 0.0;
        z[i] = x[i];
      }
      z[last] = zn0;
      return f(z);
    }
    if (surface == Surface::transversal) return transversal(x, zn0);

    // z_n = zn0 - kappa |y'|^2 must lie in [lo_n, hi_n]
    const double kappa = surface == Surface::paraboloid ? 1.0 : -1.0;
    double r_lo = kappa > 0 ? zn0 - box.hi[last] : box.lo[last] - zn0;
    double r_hi = kappa > 0 ? zn0 - box.lo[last] : box.hi[last] - zn0;
    if (r_hi < 0.0) return 0.0;
    const auto& ys = lattice->y;
    const auto& ws = lattice->w;
    cplx acc = 0.0;
    if (n == 2) {
      square_band(r_lo, r_hi, x[0] - box.hi[0], x[0] - box.lo[0], [&](double a, double b) {
        const auto [j0, j1] = lattice->range(a, b);
        for (std::size_t j = j0; j < j1; ++j) {
          z[0] = x[0] - ys[j];
          z[1] = zn0 - kappa * ys[j] * ys[j];
          acc += ws[j] * f(z);
        }
      });
      return acc;
    }
    // n == 3
    const double o1 = std::sqrt(r_hi);
    const auto [i0, i1] =
        lattice->range(std::max(x[0] - box.hi[0], -o1), std::min(x[0] - box.lo[0], o1));
    for (std::size_t i = i0; i < i1; ++i) {
      const double y1 = ys[i];
      const double q = y1 * y1;
      z[0] = x[0] - y1;
      cplx row = 0.0;
      square_band(r_lo - q, r_hi - q, x[1] - box.hi[1], x[1] - box.lo[1], [&](double a, double b) {
        const auto [j0, j1] = lattice->range(a, b);
        for (std::size_t j = j0; j < j1; ++j) {
          z[1] = x[1] - ys[j];
          z[2] = zn0 - kappa * (q + ys[j] * ys[j]);
          row += ws[j] * f(z);
        }
      });
      acc += ws[i] * row;
    }
    return acc;
  }

  cplx transversal(const Point& x, double zn0) const {
    const Box& box = f.support();
    const int last = n - 1;
    // x'.y' must lie in [lo_n - zn0, hi_n - zn0]
    const double c_lo = box.lo[last] - zn0;
    const double c_hi = box.hi[last] - zn0;
    Point z{0.0, 0.0, 0.0};
    const double h1 = inner_step / std::max(1.0, std::abs(x[0]));
    if (n == 2) {
      const auto [a, b] = linear_band(x[0], c_lo, c_hi, box.lo[0], box.hi[0]);
      if (!(b >= a)) return 0.0;
      cplx acc = 0.0;
      const long j0 = static_cast<long>(std::ceil(a / h1));
      const long j1 = static_cast<long>(std::floor(b / h1));
      for (long j = j0; j <= j1; ++j) {
        z[0] = j * h1;
        z[1] = zn0 + x[0] * z[0];
        acc += f(z);
      }
      return h1 * acc;
    }
    const double h2 = inner_step / std::max(1.0, std::abs(x[1]));
    cplx acc = 0.0;
    const long i0 = static_cast<long>(std::ceil(box.lo[0] / h1));
    const long i1 = static_cast<long>(std::floor(box.hi[0] / h1));
    for (long i = i0; i <= i1; ++i) {
      const double y1 = i * h1;
      const double shift = x[0] * y1;
      const auto [a, b] = linear_band(x[1], c_lo - shift, c_hi - shift, box.lo[1], box.hi[1]);
      if (!(b >= a)) continue;
      const long j0 = static_cast<long>(std::ceil(a / h2));
      const long j1 = static_cast<long>(std::floor(b / h2));
      z[0] = y1;
      for (long j = j0; j <= j1; ++j) {
        z[1] = j * h2;
        z[2] = zn0 + shift + x[1] * z[1];
        acc += f(z);
      }
    }
    return h1 * h2 * acc;
  }
};

// Range [u_lo, u_hi] of z_n - (x_n - sigma s) over the support box.
std::pair<double, double> offset_range(Surface surface, int n, const Box& box, const Point& x) {
  if (surface == Surface::line || n == 1) return {0.0, 0.0};
  double lo = 0.0;
  double hi = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    if (surface == Surface::transversal) {
      const double a = x[i] * box.lo[i];
      const double b = x[i] * box.hi[i];
      lo += std::min(a, b);
      hi += std::max(a, b);
    } else {
      const double a = x[i] - box.hi[i];
      const double b = x[i] - box.lo[i];
      const double dist = (a > 0.0) ? a : (b < 0.0 ? -b : 0.0);
      lo += dist * dist;
      hi += std::max(a * a, b * b);
    }
  }
  if (surface == Surface::paraboloid) return {-hi, -lo};
  return {lo, hi};
}

double lattice_radius(const Box& box, int n, std::span<const Point> xs) {
  double r = 0.0;
  for (const auto& x : xs) {
    for (int i = 0; i + 1 < n; ++i) {
      r = std::max({r, std::abs(x[i] - box.lo[i]), std::abs(x[i] - box.hi[i])});
    }
  }
  return r;
}

}  // namespace

LayeredIntegral::LayeredIntegral(Surface surface, std::optional<FracOrder> alpha, Sign sign,
                                 QuadratureConfig config)
    : surface_(surface), alpha_(alpha), sign_(sign), config_(config) {
  if (!(config_.inner_step > 0.0)) throw Error("LayeredIntegral: inner step must be positive");
  if (alpha_) {
    if (!(alpha_->alpha0 > 0.0)) {
      throw Error("LayeredIntegral: Re alpha must be positive (use the continuation ladder)");
    }
    rule_.emplace(*alpha_, config_);
    norm_ = rgamma(alpha_->value());
  }
}

std::vector<cplx> LayeredIntegral::at(const PointFunction& f, std::span<const Point> xs) const {
  const int n = f.dim();
  const Box& box = f.support();
  std::optional<ArcLattice> lattice;
  if ((surface_ == Surface::paraboloid || surface_ == Surface::dual_paraboloid) && n > 1) {
    lattice.emplace(lattice_radius(box, n, xs), config_.inner_step);
  }
  const Inner inner{f, surface_, n, config_.inner_step, lattice ? &*lattice : nullptr};
  const double sigma = sign_value(sign_);
  const int last = n - 1;

  std::vector<cplx> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t p) {
    const Point& x = xs[p];
    if (!rule_) {
      out[p] = inner(x, x[last]);
      return;
    }
    const auto [u_lo, u_hi] = offset_range(surface_, n, box, x);
    double s_lo;
    double s_hi;
    if (sigma > 0) {
      s_lo = x[last] + u_lo - box.hi[last];
      s_hi = x[last] + u_hi - box.lo[last];
    } else {
      s_lo = box.lo[last] - x[last] - u_hi;
      s_hi = box.hi[last] - x[last] - u_lo;
    }
    s_lo = std::max(0.0, s_lo);
    std::vector<double> nodes;
    std::vector<cplx> weights;
    rule_->build(s_lo, s_hi, nodes, weights);
    cplx acc = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      acc += weights[k] * inner(x, x[last] - sigma * nodes[k]);
    }
    out[p] = norm_ * acc;
  });
  return out;
}

cplx LayeredIntegral::at(const PointFunction& f, const Point& x) const {
  return at(f, std::span<const Point>(&x, 1))[0];
}

SampledField LayeredIntegral::on_grid(const PointFunction& f, const Grid& out) const {
  if (f.dim() != out.dim()) throw Error("LayeredIntegral: dimension mismatch");
  std::vector<Point> xs(out.size());
  for (std::size_t j = 0; j < out.size(); ++j) xs[j] = out.node(j);
  return {out, Domain::space, at(f, xs)};
}

}  // namespace pararadon
