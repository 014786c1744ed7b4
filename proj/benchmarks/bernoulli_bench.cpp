#include <benchmark/benchmark.h>

#include "bernmod/bernoulli.hpp"

using namespace bernmod;

namespace {

void BM_voronoi(benchmark::State& st) {
  const FieldCtx ctx(static_cast<u64>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(bernoulli_all_voronoi(ctx));
}

void BM_powerseries(benchmark::State& st) {
  const FieldCtx ctx(static_cast<u64>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(bernoulli_all_powerseries(ctx));
}

void BM_single(benchmark::State& st) {
  const FieldCtx ctx(static_cast<u64>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(bernoulli_single(ctx, 32));
}

}  // namespace

BENCHMARK(BM_voronoi)->Arg(10007)->Arg(100003)->Arg(1000003)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_powerseries)->Arg(10007)->Arg(100003)->Arg(1000003)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_single)->Arg(10007)->Arg(1000003)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
