#include <benchmark/benchmark.h>

#include "ein/moduli_tables.hpp"

namespace {

void BM_SectionTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ein::section_table(0, state.range(0)));
    benchmark::DoNotOptimize(ein::section_table(-1, state.range(0)));
  }
}
BENCHMARK(BM_SectionTable)->Arg(20)->Arg(200)->Arg(2000);

void BM_IdentitySweep(benchmark::State& state) {
  const int c_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::int64_t acc = 0;
    for (int e : {0, -1})
      for (int c = 1; c <= c_max; ++c)
        for (int a = 0; a < c; ++a)
          for (int b = a; a + b < c; ++b) {
            const auto p = ein::EinParams::make(e, a, b, c);
            acc += ein::aux_dims(p).dim_U + ein::dim_nbar(p);
          }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_IdentitySweep)->Arg(12)->Arg(40);

}  // namespace
