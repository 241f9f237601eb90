#include "pararadon/point_function.hpp"

#include <cmath>
#include <memory>

namespace pararadon {

PointFunction PointFunction::zero(int dim) {
  return {dim, [](const Point&) { return cplx(0.0); }, Box{}};
}

PointFunction reflect(const PointFunction& f) {
  Box b;
  for (int i = 0; i < f.dim(); ++i) {
    b.lo[i] = -f.support().hi[i];
    b.hi[i] = -f.support().lo[i];
  }
  const int n = f.dim();
  return {n,
          [f, n](const Point& x) {
            Point y{0.0, 0.0, 0.0};
            for (int i = 0; i < n; ++i) y[i] = -x[i];
            return f(y);
          },
          b};
}

SampledField sample(const PointFunction& f, const Grid& g) {
  if (f.dim() != g.dim()) throw Error("sample: dimension mismatch");
  std::vector<cplx> v(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) v[j] = f(g.node(j));
  return {g, Domain::space, std::move(v)};
}

namespace {

// Four-point Lagrange weights at fractional offset t in [0, 1) between
// nodes 0 and 1 of the stencil {-1, 0, 1, 2}.
std::array<double, 4> cubic_weights(double t) {
  return {-t * (t - 1.0) * (t - 2.0) / 6.0, (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0,
          -(t + 1.0) * t * (t - 2.0) / 2.0, (t + 1.0) * t * (t - 1.0) / 6.0};
}

}  // namespace

PointFunction interpolate(const SampledField& f) {
  if (f.tag() != Domain::space) throw Error("interpolate: spatial field expected");
  auto field = std::make_shared<const SampledField>(f);
  const Grid& g = field->grid();
  Box b;
  for (int i = 0; i < g.dim(); ++i) {
    b.lo[i] = g.nodes(i).front();
    b.hi[i] = g.nodes(i).back();
  }
  return {g.dim(),
          [field](const Point& x) -> cplx {
            const Grid& g = field->grid();
            const int n = g.dim();
            std::array<int, kMaxDim> base{0, 0, 0};
            std::array<std::array<double, 4>, kMaxDim> w{};
            for (int i = 0; i < n; ++i) {
              const double u = (x[i] - g.nodes(i)[0]) / g.spacing(i);
              const double fl = std::floor(u);
              if (u < 0.0 || u > g.points(i) - 1) return 0.0;
              base[i] = static_cast<int>(fl);
              w[i] = cubic_weights(u - fl);
            }
            cplx acc = 0.0;
            std::array<int, kMaxDim> idx{0, 0, 0};
            const int combos = 1 << (2 * n);
            for (int c = 0; c < combos; ++c) {
              double weight = 1.0;
              bool inside = true;
              for (int i = 0; i < n; ++i) {
                const int o = (c >> (2 * i)) & 3;
                idx[i] = base[i] + o - 1;
                if (idx[i] < 0 || idx[i] >= g.points(i)) {
                  inside = false;
                  break;
                }
                weight *= w[i][o];
              }
              if (inside) acc += weight * (*field)[g.flatten(idx)];
            }
            return acc;
          },
          b};
}

}  // namespace pararadon
