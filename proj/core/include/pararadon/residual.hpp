#pragma once

#include <string>

#include "pararadon/sampled_field.hpp"

namespace pararadon {

/// Outcome of comparing two evaluations of the same quantity.
/// pass holds exactly when both errors are finite and rel_l2 <= tolerance.
struct ResidualReport {
  std::string name;
  GridSpec grid;
  double max_abs = 0.0;
  double rel_l2 = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

/// Compares field a against the reference b.
ResidualReport compare_fields(std::string name, const SampledField& a, const SampledField& b,
                              double tolerance);

/// Scalar version: max_abs = |a - b|, rel_l2 = |a - b| / |b| (|a - b| if b = 0).
ResidualReport compare_values(std::string name, const GridSpec& grid, cplx a, cplx b,
                              double tolerance);

/// Recomputes pass from the stored errors.
void finalize(ResidualReport& r);

}  // namespace pararadon
