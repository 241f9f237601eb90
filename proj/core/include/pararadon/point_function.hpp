#pragma once

#include <functional>

#include "pararadon/sampled_field.hpp"

namespace pararadon {

/// Axis-aligned box outside which a function is negligible.
struct Box {
  std::array<double, kMaxDim> lo{0.0, 0.0, 0.0};
  std::array<double, kMaxDim> hi{0.0, 0.0, 0.0};
};

/// A function on R^n that can be evaluated at any point, together with a
/// box carrying its numerically relevant support. This is what the
/// quadrature-based operators consume.
class PointFunction {
 public:
  using Eval = std::function<cplx(const Point&)>;

  PointFunction(int dim, Eval eval, Box support)
      : dim_(dim), eval_(std::move(eval)), support_(support) {}

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const Box& support() const { return support_; }
  cplx operator()(const Point& x) const { return eval_(x); }

  static PointFunction zero(int dim);

 private:
  int dim_;
  Eval eval_;
  Box support_;
};

/// (J f)(x) = f(-x)
PointFunction reflect(const PointFunction& f);

/// Samples f at every node of g.
SampledField sample(const PointFunction& f, const Grid& g);

/// Tensor-product cubic Lagrange interpolant of a spatial field, zero
/// outside the grid box.
PointFunction interpolate(const SampledField& f);

}  // namespace pararadon
