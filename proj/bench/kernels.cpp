// Serial reference against the OpenMP kernel for each parallel routine.
#include "belyi/mixing.hpp"
#include "belyi/pd_stats.hpp"
#include "belyi/spectrum.hpp"
#include "belyi/symrep.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace belyi;

void BM_FacesParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_faces(n, 3, 2000, 1));
  state.SetItemsProcessed(state.iterations() * 2000);
}
void BM_FacesSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_faces_serial(n, 3, 2000, 1));
  state.SetItemsProcessed(state.iterations() * 2000);
}
BENCHMARK(BM_FacesParallel)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FacesSerial)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CharactersParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rectangular_characters(n, 3));
}
void BM_CharactersSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rectangular_characters_serial(n, 3));
}
BENCHMARK(BM_CharactersParallel)->Arg(24)->Arg(36)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CharactersSerial)->Arg(24)->Arg(36)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_LawParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_convolution_law(n, 3));
}
void BM_LawSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_convolution_law_serial(n, 3));
}
BENCHMARK(BM_LawParallel)->Arg(18)->Arg(24)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LawSerial)->Arg(18)->Arg(24)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_PdParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pd_tops(1.0, 20000, 2));
}
void BM_PdSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pd_tops_serial(1.0, 20000, 2));
}
BENCHMARK(BM_PdParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PdSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SpectrumParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(spectral_histogram(512, 3, 16, 40, 3));
}
void BM_SpectrumSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(spectral_histogram_serial(512, 3, 16, 40, 3));
}
BENCHMARK(BM_SpectrumParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SpectrumSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
