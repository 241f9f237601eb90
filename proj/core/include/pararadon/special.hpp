#pragma once

#include "pararadon/types.hpp"

namespace pararadon {

/// log Gamma(z) on the principal sheet (Lanczos, g = 7), z not a pole.
cplx log_gamma(cplx z);

/// Gamma(z) for complex z; throws Error at the poles 0, -1, -2, ...
cplx gamma(cplx z);

/// 1/Gamma(z), entire; exactly zero at the poles.
cplx rgamma(cplx z);

/// Probabilists' Hermite polynomial He_d(u).
double hermite_he(int d, double u);

/// He_d with every coefficient replaced by its absolute value, evaluated at
/// |u|. Bounds |He_d(u)| from above.
double hermite_he_majorant(int d, double u);

}  // namespace pararadon
