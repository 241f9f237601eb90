#include "pararadon/residual.hpp"

#include <cmath>

#include "pararadon/norms.hpp"

namespace pararadon {

void finalize(ResidualReport& r) {
  r.pass = std::isfinite(r.max_abs) && std::isfinite(r.rel_l2) && r.rel_l2 <= r.tolerance;
}

ResidualReport compare_fields(std::string name, const SampledField& a, const SampledField& b,
                              double tolerance) {
  ResidualReport r;
  r.name = std::move(name);
  r.grid = b.grid().spec();
  r.max_abs = max_abs_diff(a, b);
  r.rel_l2 = relative_l2_error(a, b);
  r.tolerance = tolerance;
  finalize(r);
  return r;
}

ResidualReport compare_values(std::string name, const GridSpec& grid, cplx a, cplx b,
                              double tolerance) {
  ResidualReport r;
  r.name = std::move(name);
  r.grid = grid;
  r.max_abs = std::abs(a - b);
  r.rel_l2 = std::abs(b) > 0.0 ? r.max_abs / std::abs(b) : r.max_abs;
  r.tolerance = tolerance;
  finalize(r);
  return r;
}

}  // namespace pararadon
