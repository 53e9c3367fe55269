// Serial reference kernels against their OpenMP counterparts.
//   ./bench_kernels --benchmark_filter=FidelityScan

#include <benchmark/benchmark.h>

#include <numbers>

#include "qwalk/circulant.hpp"
#include "qwalk/kernels.hpp"
#include "qwalk/operators.hpp"

namespace {

using namespace qwalk;

Spectrum spectrum_for(std::size_t n) {
  // ICG_n({1, n/2}) for n a multiple of 8; fidelity scans over such graphs
  // dominate the search and regression runs.
  return decompose(icg(n, {1, n / 2}));
}

template <kernels::FidelityTable (*Scan)(const Spectrum&, VertexId, std::span<const double>)>
void BM_FidelityScan(benchmark::State& state) {
  const auto spec = spectrum_for(static_cast<std::size_t>(state.range(0)));
  const auto times = kernels::uniform_grid(4.0 * std::numbers::pi, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(Scan(spec, VertexId{0}, times));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}

template <std::vector<std::complex<double>> (*Series)(const Spectrum&, VertexId, VertexId, std::span<const double>)>
void BM_AmplitudeSeries(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto spec = spectrum_for(n);
  const auto times = kernels::uniform_grid(4.0 * std::numbers::pi, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(Series(spec, VertexId{0}, VertexId{n / 2}, times));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void grid_args(benchmark::internal::Benchmark* b) {
  for (long n : {16, 48, 96})
    for (long grid : {512, 4096}) b->Args({n, grid});
}

}  // namespace

BENCHMARK(BM_FidelityScan<kernels::fidelity_scan_serial>)->Name("FidelityScan/serial")->Apply(grid_args);
BENCHMARK(BM_FidelityScan<kernels::fidelity_scan_omp>)->Name("FidelityScan/omp")->Apply(grid_args)->UseRealTime();
BENCHMARK(BM_AmplitudeSeries<kernels::amplitude_series_serial>)->Name("AmplitudeSeries/serial")->Apply(grid_args);
BENCHMARK(BM_AmplitudeSeries<kernels::amplitude_series_omp>)
    ->Name("AmplitudeSeries/omp")
    ->Apply(grid_args)
    ->UseRealTime();

BENCHMARK_MAIN();
