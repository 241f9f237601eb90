#include "pararadon/derivative.hpp"

#include "pararadon/fourier.hpp"

namespace pararadon {

namespace {

SampledField spectral_derivative(const SampledField& f, int k) {
  const Grid& g = f.grid();
  const int ax = g.dim() - 1;
  auto spectrum = std::move(fourier_forward(f)).release();
  for (std::size_t m = 0; m < spectrum.size(); ++m) {
    const int kn = g.unflatten(m)[ax];
    if (kn == 0 && k % 2 == 1) {
      spectrum[m] = 0.0;
      continue;
    }
    const double xi = g.frequencies(ax)[kn];
    spectrum[m] *= std::pow(cplx(0.0, -xi), k);
  }
  return fourier_inverse(SampledField(g, Domain::frequency, std::move(spectrum)));
}

// One application of a fourth-order centred stencil along x_n.
std::vector<cplx> stencil_pass(const Grid& g, const std::vector<cplx>& v, int order) {
  const int ax = g.dim() - 1;
  const int nn = g.points(ax);
  const double h = g.spacing(ax);
  std::vector<cplx> out(v.size());
  auto at = [&](std::size_t base, int j) -> cplx {
    return (j < 0 || j >= nn) ? cplx(0.0) : v[base + j];
  };
  for (std::size_t base = 0; base < v.size(); base += nn) {
    for (int j = 0; j < nn; ++j) {
      if (order == 1) {
        out[base + j] = (-at(base, j + 2) + 8.0 * at(base, j + 1) - 8.0 * at(base, j - 1) +
                         at(base, j - 2)) /
                        (12.0 * h);
      } else {
        out[base + j] = (-at(base, j + 2) + 16.0 * at(base, j + 1) - 30.0 * at(base, j) +
                         16.0 * at(base, j - 1) - at(base, j - 2)) /
                        (12.0 * h * h);
      }
    }
  }
  return out;
}

}  // namespace

SampledField partial_derivative_n(const SampledField& f, int k, DerivativeMethod method) {
  if (k < 1) throw Error("partial_derivative_n: order must be >= 1");
  if (f.tag() != Domain::space) throw Error("partial_derivative_n: spatial field expected");
  if (method == DerivativeMethod::spectral) return spectral_derivative(f, k);

  std::vector<cplx> v(f.values().begin(), f.values().end());
  int remaining = k;
  while (remaining >= 2) {
    v = stencil_pass(f.grid(), v, 2);
    remaining -= 2;
  }
  if (remaining == 1) v = stencil_pass(f.grid(), v, 1);
  return {f.grid(), Domain::space, std::move(v)};
}

}  // namespace pararadon
