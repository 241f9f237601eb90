#include <benchmark/benchmark.h>

#include "pararadon/fourier.hpp"
#include "pararadon/spatial.hpp"
#include "pararadon/spectral.hpp"
#include "pararadon/transversal.hpp"

using namespace pararadon;

namespace {

const TestFunction kPhi = TestFunction::phi_class(2, {}, {1.0, 1.0}, 6.0);

void BM_FourierRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid g(GridSpec::cube(2, 8.0, n));
  const SampledField f = sample(kPhi, g);
  for (auto _ : state) benchmark::DoNotOptimize(fourier_inverse(fourier_forward(f)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}
BENCHMARK(BM_FourierRoundTrip)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_MultiplierBuild(benchmark::State& state) {
  const Grid g(GridSpec::cube(2, 8.0, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(make_multiplier(g, FracOrder(0.5, 0.3), Sign::plus));
}
BENCHMARK(BM_MultiplierBuild)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_SpectralFracint(benchmark::State& state) {
  const Grid g(GridSpec::cube(2, 8.0, static_cast<int>(state.range(0))));
  const MultiplierField m = make_multiplier(g, 0.5, Sign::plus);
  for (auto _ : state) benchmark::DoNotOptimize(apply_multiplier(kPhi, m));
}
BENCHMARK(BM_SpectralFracint)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_QuadraturePoint(benchmark::State& state) {
  const Grid out(GridSpec::cube(2, 1.0, 8));
  const Sign s = state.range(0) > 0 ? Sign::plus : Sign::minus;
  for (auto _ : state) benchmark::DoNotOptimize(parabolic_fracint(kPhi, 0.5, s, out));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(out.size()));
}
BENCHMARK(BM_QuadraturePoint)->Arg(1)->Arg(-1)->Unit(benchmark::kMillisecond);

void BM_RadonPoint(benchmark::State& state) {
  const Grid out(GridSpec::cube(2, 1.0, 8));
  for (auto _ : state) benchmark::DoNotOptimize(parabolic_radon(kPhi, out));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(out.size()));
}
BENCHMARK(BM_RadonPoint)->Unit(benchmark::kMillisecond);

void BM_TransversalPoint(benchmark::State& state) {
  const Grid out(GridSpec::cube(2, 1.0, 8));
  for (auto _ : state) benchmark::DoNotOptimize(transversal_fracint(kPhi, 0.5, Sign::plus, out));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(out.size()));
}
BENCHMARK(BM_TransversalPoint)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
