#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pararadon/types.hpp"

namespace pararadon {

/// Uniform box [-L_i, L_i) with N_i nodes per axis. The last axis is x_n.
struct GridSpec {
  int dim = 1;
  std::array<double, kMaxDim> half_extent{1.0, 1.0, 1.0};
  std::array<int, kMaxDim> points{8, 8, 8};

  [[nodiscard]] double spacing(int axis) const { return 2.0 * half_extent[axis] / points[axis]; }
  [[nodiscard]] double freq_step(int axis) const { return kPi / half_extent[axis]; }

  /// Same L and N on every axis.
  static GridSpec cube(int dim, double half_extent, int points);

  /// Axes beyond dim are ignored.
  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    if (a.dim != b.dim) return false;
    for (int i = 0; i < a.dim && i < kMaxDim; ++i) {
      if (a.half_extent[i] != b.half_extent[i] || a.points[i] != b.points[i]) return false;
    }
    return true;
  }
};

/// Throws Error unless N_i is even and >= 8 and L_i > 0 for every axis.
void validate(const GridSpec& spec);

std::string describe(const GridSpec& spec);

/// A validated grid with precomputed spatial and frequency nodes.
///
/// Spatial nodes are x_j = -L + j h, j = 0..N-1. Frequency nodes are
/// m * pi/L for m = -N/2..N/2-1, stored in that (centred) order, so index
/// N/2 is the xi = 0 node.
class Grid {
 public:
  explicit Grid(const GridSpec& spec);

  [[nodiscard]] const GridSpec& spec() const { return spec_; }
  [[nodiscard]] int dim() const { return spec_.dim; }
  [[nodiscard]] int points(int axis) const { return spec_.points[axis]; }
  [[nodiscard]] double spacing(int axis) const { return spec_.spacing(axis); }
  [[nodiscard]] double freq_step(int axis) const { return spec_.freq_step(axis); }
  [[nodiscard]] std::size_t size() const { return size_; }

  [[nodiscard]] std::span<const double> nodes(int axis) const { return nodes_[axis]; }
  [[nodiscard]] std::span<const double> frequencies(int axis) const { return freqs_[axis]; }

  /// Product of spacings, the Riemann-sum weight of a spatial node.
  [[nodiscard]] double cell_volume() const;
  /// Product of frequency steps.
  [[nodiscard]] double freq_cell_volume() const;

  /// Row-major multi-index of a flat index; axis dim-1 varies fastest.
  [[nodiscard]] std::array<int, kMaxDim> unflatten(std::size_t flat) const;
  [[nodiscard]] std::size_t flatten(const std::array<int, kMaxDim>& idx) const;

  [[nodiscard]] Point node(std::size_t flat) const;
  [[nodiscard]] Point frequency(std::size_t flat) const;

  /// The aligned sub-grid covering [-L/2, L/2) on every axis with the same
  /// spacing. Requires N_i divisible by 4 and N_i/2 >= 8.
  [[nodiscard]] Grid interior() const;

 private:
  GridSpec spec_;
  std::size_t size_ = 0;
  std::array<std::vector<double>, kMaxDim> nodes_;
  std::array<std::vector<double>, kMaxDim> freqs_;
};

inline Grid build_grid(const GridSpec& spec) { return Grid(spec); }

}  // namespace pararadon
