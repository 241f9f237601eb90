#pragma once

#include <limits>

#include "pararadon/sampled_field.hpp"

namespace pararadon {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Riemann-sum L^p norm, (sum |v|^p * cell)^(1/p); the max of |v| for p = inf.
/// Frequency fields use the frequency cell volume. Throws Error for p < 1.
double lp_norm(const SampledField& f, double p);

/// max_j |a_j - b_j|
double max_abs_diff(const SampledField& a, const SampledField& b);

/// ||a - b||_2 / ||b||_2, or ||a - b||_2 when b vanishes identically.
double relative_l2_error(const SampledField& a, const SampledField& b);

/// Bilinear pairing <f, g> = sum f_j g_j * cell (no conjugation).
cplx pairing(const SampledField& f, const SampledField& g);

}  // namespace pararadon
