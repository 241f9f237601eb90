#pragma once

#include <span>
#include <vector>

#include "pararadon/grid.hpp"

namespace pararadon {

enum class Domain { space, frequency };

inline const char* to_string(Domain d) { return d == Domain::space ? "space" : "frequency"; }

/// Complex samples on a grid, tagged with the domain they index.
/// Immutable once built; every operation returns a new field.
class SampledField {
 public:
  /// Throws Error if the size does not match or any value is non-finite.
  SampledField(Grid grid, Domain tag, std::vector<cplx> values);

  static SampledField zeros(const Grid& grid, Domain tag = Domain::space);

  [[nodiscard]] const Grid& grid() const { return grid_; }
  [[nodiscard]] Domain tag() const { return tag_; }
  [[nodiscard]] std::span<const cplx> values() const { return values_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] const cplx& operator[](std::size_t i) const { return values_[i]; }

  /// Moves the storage out; the field is left empty.
  [[nodiscard]] std::vector<cplx> release() && { return std::move(values_); }

 private:
  Grid grid_;
  Domain tag_;
  std::vector<cplx> values_;
};

SampledField operator+(const SampledField& a, const SampledField& b);
SampledField operator-(const SampledField& a, const SampledField& b);
SampledField operator*(cplx s, const SampledField& a);

/// Restriction to an aligned sub-grid (same spacing, nodes a subset).
SampledField restrict_to(const SampledField& f, const Grid& sub);

}  // namespace pararadon
