#include <random>

#include <benchmark/benchmark.h>

#include "ein/fp_matrix.hpp"
#include "ein/graded_poly.hpp"
#include "ein/monad.hpp"
#include "ein/seed.hpp"

namespace {

void BM_RankSquare(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ein::PrimeField field;
  std::mt19937_64 gen(1);
  ein::FpMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = ein::uniform_residue(gen, field.p());
  for (auto _ : state) benchmark::DoNotOptimize(ein::rank(m, field));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RankSquare)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNCubed);

void BM_MultMap(benchmark::State& state) {
  const ein::PrimeField field;
  const auto f = ein::random_form(3, 5, field);
  const int src = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ein::mult_map(f, src, field));
}
BENCHMARK(BM_MultMap)->DenseRange(2, 10, 4);

void BM_BasepointFree(benchmark::State& state) {
  const ein::PrimeField field;
  const int d = static_cast<int>(state.range(0));
  std::array<ein::HomogeneousForm, 4> forms;
  for (std::size_t i = 0; i < 4; ++i) forms[i] = ein::random_form(d, ein::derive_seed(9, i), field);
  for (auto _ : state) benchmark::DoNotOptimize(ein::is_basepoint_free(forms, field));
}
BENCHMARK(BM_BasepointFree)->DenseRange(1, 4);

}  // namespace
