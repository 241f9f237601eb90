#include "pararadon/norms.hpp"

#include <algorithm>
#include <cmath>

namespace pararadon {

namespace {

double cell(const SampledField& f) {
  return f.tag() == Domain::space ? f.grid().cell_volume() : f.grid().freq_cell_volume();
}

void require_same(const SampledField& a, const SampledField& b) {
  if (!(a.grid().spec() == b.grid().spec()) || a.tag() != b.tag()) {
    throw Error("norms: fields live on different grids");
  }
}

}  // namespace

double lp_norm(const SampledField& f, double p) {
  if (!(p >= 1.0)) throw Error("lp_norm: exponent must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : f.values()) m = std::max(m, std::abs(v));
    return m;
  }
  // Scale by the max to keep |v|^p in range for large p.
  double m = 0.0;
  for (const auto& v : f.values()) m = std::max(m, std::abs(v));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (const auto& v : f.values()) s += std::pow(std::abs(v) / m, p);
  return m * std::pow(s * cell(f), 1.0 / p);
}

double max_abs_diff(const SampledField& a, const SampledField& b) {
  require_same(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    if (!(d <= m)) m = d;  // keeps NaN
  }
  return m;
}

double relative_l2_error(const SampledField& a, const SampledField& b) {
  require_same(a, b);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num * cell(a));
}

cplx pairing(const SampledField& f, const SampledField& g) {
  require_same(f, g);
  cplx s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
  return s * cell(f);
}

}  // namespace pararadon
