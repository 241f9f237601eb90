#pragma once

#include "pararadon/sampled_field.hpp"

namespace pararadon {

// Convention: the forward transform carries the kernel e^{+i x.xi},
//
//   F(xi) = \int f(x) e^{i x.xi} dx,     f(x) = (2 pi)^{-n} \int F(xi) e^{-i x.xi} d xi,
//
// which is the opposite sign to the usual FFT "forward". The discrete
// transforms below approximate these integrals by Riemann sums on the grid:
// spatial nodes start at -L, so e^{i x_j xi_m} = (-1)^m (-1)^j e^{2 pi i jm/N}
// and the (-1) factors are applied exactly. The pair is an exact discrete
// inverse and satisfies sum |F|^2 dxi = (2 pi)^n sum |f|^2 h.

/// Space -> frequency. Throws Error on a frequency-tagged input.
SampledField fourier_forward(const SampledField& f);

/// Frequency -> space. Throws Error on a space-tagged input.
SampledField fourier_inverse(const SampledField& F);

}  // namespace pararadon
