#include <benchmark/benchmark.h>

#include "ein/cohomology.hpp"

namespace {

// (0,0,c-1,c): f3 has degree 1, the others grow with c.
void BM_RandomMonad(benchmark::State& state) {
  const ein::PrimeField field;
  const int c = static_cast<int>(state.range(0));
  const auto params = ein::EinParams::make(0, 0, 1, c);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ein::random_monad(params, field, ++seed));
}
BENCHMARK(BM_RandomMonad)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_HAll(benchmark::State& state) {
  const ein::PrimeField field;
  const int c = static_cast<int>(state.range(0));
  const auto monad = ein::random_monad(ein::EinParams::make(0, 1, 1, c), field, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ein::h_all(monad, c, field));
}
BENCHMARK(BM_HAll)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_CohomologyTable(benchmark::State& state) {
  const ein::PrimeField field;
  const int c = static_cast<int>(state.range(0));
  const auto monad = ein::random_monad(ein::EinParams::make(-1, 0, 1, c), field, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ein::cohomology_table(monad, -c - 4, c, field));
}
BENCHMARK(BM_CohomologyTable)->DenseRange(2, 5)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
