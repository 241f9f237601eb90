#pragma once

#include "pararadon/sampled_field.hpp"

namespace pararadon {

enum class DerivativeMethod { spectral, finite_difference };

/// k-th derivative along the last axis x_n.
///
/// `spectral` multiplies the transform by (-i xi_n)^k (the symbol of d/dx_n
/// under the e^{+i x.xi} convention) and zeroes the Nyquist mode for odd k;
/// it assumes the field decays to zero at the box ends. `finite_difference`
/// applies fourth-order centred stencils, treating values outside the box
/// as zero. Throws Error for k < 1 or a frequency-tagged input.
SampledField partial_derivative_n(const SampledField& f, int k,
                                  DerivativeMethod method = DerivativeMethod::spectral);

}  // namespace pararadon
