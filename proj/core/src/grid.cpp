#include "pararadon/grid.hpp"

#include <sstream>

namespace pararadon {

GridSpec GridSpec::cube(int dim, double half_extent, int points) {
  GridSpec s;
  s.dim = dim;
  s.half_extent = {half_extent, half_extent, half_extent};
  s.points = {points, points, points};
  return s;
}

void validate(const GridSpec& spec) {
  if (spec.dim < 1 || spec.dim > kMaxDim) {
    throw Error("grid: dimension must be 1, 2 or 3, got " + std::to_string(spec.dim));
  }
  for (int i = 0; i < spec.dim; ++i) {
    if (!(spec.half_extent[i] > 0.0)) {
      throw Error("grid: half extent must be positive on axis " + std::to_string(i));
    }
    if (spec.points[i] % 2 != 0) {
      throw Error("grid: odd point count " + std::to_string(spec.points[i]) + " on axis " +
                  std::to_string(i));
    }
    if (spec.points[i] < 8) {
      throw Error("grid: need at least 8 points on axis " + std::to_string(i));
    }
  }
}

std::string describe(const GridSpec& spec) {
  std::ostringstream os;
  os << "n=" << spec.dim << " L=(";
  for (int i = 0; i < spec.dim; ++i) os << (i ? "," : "") << spec.half_extent[i];
  os << ") N=(";
  for (int i = 0; i < spec.dim; ++i) os << (i ? "," : "") << spec.points[i];
  os << ")";
  return os.str();
}

Grid::Grid(const GridSpec& spec) : spec_(spec) {
  validate(spec_);
  size_ = 1;
  for (int i = 0; i < spec_.dim; ++i) {
    const int n = spec_.points[i];
    const double h = spec_.spacing(i);
    const double dxi = spec_.freq_step(i);
    nodes_[i].resize(n);
    freqs_[i].resize(n);
    for (int j = 0; j < n; ++j) {
      nodes_[i][j] = -spec_.half_extent[i] + j * h;
      freqs_[i][j] = (j - n / 2) * dxi;
    }
    size_ *= static_cast<std::size_t>(n);
  }
}

double Grid::cell_volume() const {
  double v = 1.0;
  for (int i = 0; i < dim(); ++i) v *= spacing(i);
  return v;
}

double Grid::freq_cell_volume() const {
  double v = 1.0;
  for (int i = 0; i < dim(); ++i) v *= freq_step(i);
  return v;
}

std::array<int, kMaxDim> Grid::unflatten(std::size_t flat) const {
  std::array<int, kMaxDim> idx{0, 0, 0};
  for (int i = dim() - 1; i >= 0; --i) {
    const auto n = static_cast<std::size_t>(points(i));
    idx[i] = static_cast<int>(flat % n);
    flat /= n;
  }
  return idx;
}

std::size_t Grid::flatten(const std::array<int, kMaxDim>& idx) const {
  std::size_t flat = 0;
  for (int i = 0; i < dim(); ++i) flat = flat * static_cast<std::size_t>(points(i)) + idx[i];
  return flat;
}

Point Grid::node(std::size_t flat) const {
  const auto idx = unflatten(flat);
  Point p{0.0, 0.0, 0.0};
  for (int i = 0; i < dim(); ++i) p[i] = nodes_[i][idx[i]];
  return p;
}

Point Grid::frequency(std::size_t flat) const {
  const auto idx = unflatten(flat);
  Point p{0.0, 0.0, 0.0};
  for (int i = 0; i < dim(); ++i) p[i] = freqs_[i][idx[i]];
  return p;
}

Grid Grid::interior() const {
  GridSpec sub = spec_;
  for (int i = 0; i < dim(); ++i) {
    if (spec_.points[i] % 4 != 0) {
      throw Error("grid: interior sub-grid needs N divisible by 4 on axis " + std::to_string(i));
    }
    sub.half_extent[i] = 0.5 * spec_.half_extent[i];
    sub.points[i] = spec_.points[i] / 2;
  }
  return Grid(sub);
}

}  // namespace pararadon
