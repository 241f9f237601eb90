#include "pararadon/sampled_field.hpp"

#include <cmath>

namespace pararadon {

SampledField::SampledField(Grid grid, Domain tag, std::vector<cplx> values)
    : grid_(std::move(grid)), tag_(tag), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw Error("sampled field: " + std::to_string(values_.size()) + " values for a grid of " +
                std::to_string(grid_.size()) + " nodes");
  }
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error("sampled field: non-finite value");
    }
  }
}

SampledField SampledField::zeros(const Grid& grid, Domain tag) {
  return {grid, tag, std::vector<cplx>(grid.size())};
}

namespace {

void require_compatible(const SampledField& a, const SampledField& b) {
  if (!(a.grid().spec() == b.grid().spec()) || a.tag() != b.tag()) {
    throw Error("sampled field: incompatible operands");
  }
}

}  // namespace

SampledField operator+(const SampledField& a, const SampledField& b) {
  require_compatible(a, b);
  std::vector<cplx> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return {a.grid(), a.tag(), std::move(v)};
}

SampledField operator-(const SampledField& a, const SampledField& b) {
  require_compatible(a, b);
  std::vector<cplx> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return {a.grid(), a.tag(), std::move(v)};
}

SampledField operator*(cplx s, const SampledField& a) {
  std::vector<cplx> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * a[i];
  return {a.grid(), a.tag(), std::move(v)};
}

SampledField restrict_to(const SampledField& f, const Grid& sub) {
  const Grid& g = f.grid();
  if (sub.dim() != g.dim()) throw Error("restrict_to: dimension mismatch");
  std::array<int, kMaxDim> offset{0, 0, 0};
  for (int i = 0; i < g.dim(); ++i) {
    const double h = g.spacing(i);
    if (std::abs(sub.spacing(i) - h) > 1e-12 * h) throw Error("restrict_to: spacing mismatch");
    const double shift = (sub.nodes(i)[0] - g.nodes(i)[0]) / h;
    offset[i] = static_cast<int>(std::lround(shift));
    if (std::abs(shift - offset[i]) > 1e-9 || offset[i] < 0 ||
        offset[i] + sub.points(i) > g.points(i)) {
      throw Error("restrict_to: sub-grid not aligned with parent grid");
    }
  }
  std::vector<cplx> v(sub.size());
  for (std::size_t k = 0; k < sub.size(); ++k) {
    auto idx = sub.unflatten(k);
    for (int i = 0; i < g.dim(); ++i) idx[i] += offset[i];
    v[k] = f[g.flatten(idx)];
  }
  return {sub, f.tag(), std::move(v)};
}

}  // namespace pararadon
