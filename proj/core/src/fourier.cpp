#include "pararadon/fourier.hpp"

#include <fftw3.h>

#include <cstring>
#include <memory>
#include <mutex>

namespace pararadon {

namespace {

// FFTW's planner is not re-entrant; execution on distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  explicit FftwBuffer(std::size_t n)
      : data(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))) {
    if (data == nullptr) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  fftw_complex* data;
};

// In-place unnormalised DFT with exponent sign `direction`.
void run_dft(const Grid& g, fftw_complex* buf, int direction) {
  std::array<int, kMaxDim> dims{};
  for (int i = 0; i < g.dim(); ++i) dims[i] = g.points(i);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft(g.dim(), dims.data(), buf, buf, direction, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

// (-1)^(sum of indices) for the multi-index of `flat`.
double checkerboard(const Grid& g, std::size_t flat) {
  const auto idx = g.unflatten(flat);
  int s = 0;
  for (int i = 0; i < g.dim(); ++i) s += idx[i];
  return (s % 2 == 0) ? 1.0 : -1.0;
}

// (-1)^(sum of m_i) with m_i = k_i - N_i/2.
double centred_checkerboard(const Grid& g, std::size_t flat) {
  const auto idx = g.unflatten(flat);
  int s = 0;
  for (int i = 0; i < g.dim(); ++i) s += idx[i] - g.points(i) / 2;
  return (s % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

SampledField fourier_forward(const SampledField& f) {
  if (f.tag() != Domain::space) throw Error("fourier_forward: input is not a spatial field");
  const Grid& g = f.grid();
  const std::size_t n = g.size();
  FftwBuffer buf(n);
  for (std::size_t j = 0; j < n; ++j) {
    const cplx v = checkerboard(g, j) * f[j];
    buf.data[j][0] = v.real();
    buf.data[j][1] = v.imag();
  }
  run_dft(g, buf.data, FFTW_BACKWARD);
  const double h = g.cell_volume();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = h * centred_checkerboard(g, k) * cplx(buf.data[k][0], buf.data[k][1]);
  }
  return {g, Domain::frequency, std::move(out)};
}

SampledField fourier_inverse(const SampledField& F) {
  if (F.tag() != Domain::frequency) throw Error("fourier_inverse: input is not a frequency field");
  const Grid& g = F.grid();
  const std::size_t n = g.size();
  FftwBuffer buf(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx v = centred_checkerboard(g, k) * F[k];
    buf.data[k][0] = v.real();
    buf.data[k][1] = v.imag();
  }
  run_dft(g, buf.data, FFTW_FORWARD);
  // dxi / (2 pi) = 1 / (N h) per axis.
  double scale = 1.0;
  for (int i = 0; i < g.dim(); ++i) scale /= g.points(i) * g.spacing(i);
  std::vector<cplx> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = scale * checkerboard(g, j) * cplx(buf.data[j][0], buf.data[j][1]);
  }
  return {g, Domain::space, std::move(out)};
}

}  // namespace pararadon
