#include <benchmark/benchmark.h>
static void BM_noop(benchmark::State& st) { for (auto _ : st) benchmark::DoNotOptimize(0); }
BENCHMARK(BM_noop);
BENCHMARK_MAIN();
