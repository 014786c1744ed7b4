// Crossover measurements behind MulThresholds. Each family times one
// algorithm with the others forced off, over the size range where the
// crossover is expected.

#include <benchmark/benchmark.h>

#include <random>

#include "bernmod/polyring.hpp"

using namespace bernmod;

namespace {

const Modulus kMod(3238481);

ModPoly random_poly(std::size_t n, u64 seed) {
  std::mt19937_64 rng(seed);
  std::vector<u64> v(n);
  for (auto& x : v) x = rng() % kMod.value();
  return ModPoly(kMod, std::move(v));
}

void BM_schoolbook(benchmark::State& st) {
  const auto a = random_poly(st.range(0), 1), b = random_poly(st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(mul_schoolbook(a, b));
}

void BM_kronecker(benchmark::State& st) {
  const auto a = random_poly(st.range(0), 1), b = random_poly(st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(mul_kronecker(a, b));
}

void BM_schonhage(benchmark::State& st) {
  const auto a = random_poly(st.range(0), 1), b = random_poly(st.range(0), 2);
  MulThresholds t;
  t.nussbaumer = static_cast<std::size_t>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(mul_schonhage(a, b, t));
}

void BM_negacyclic(benchmark::State& st) {
  const std::size_t M = st.range(0);
  std::mt19937_64 rng(3);
  std::vector<u64> x(M), y(M);
  for (auto& v : x) v = rng() % kMod.value();
  for (auto& v : y) v = rng() % kMod.value();
  const NegacyclicElem a(kMod, x), b(kMod, y);
  MulThresholds t;
  t.nussbaumer = static_cast<std::size_t>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(negacyclic_mul(a, b, t));
}

void BM_middle_slice(benchmark::State& st) {
  const std::size_t n = st.range(0);
  const auto a = random_poly(2 * n - 1, 1), b = random_poly(n, 2);
  for (auto _ : st) benchmark::DoNotOptimize(middle_product_by_slice(a, b));
}

void BM_middle_transposed(benchmark::State& st) {
  const std::size_t n = st.range(0);
  const auto a = random_poly(2 * n - 1, 1), b = random_poly(n, 2);
  for (auto _ : st) benchmark::DoNotOptimize(middle_product_transposed(a, b));
}

void BM_inverse(benchmark::State& st) {
  const std::size_t n = st.range(0);
  auto f = random_poly(n, 5);
  std::vector<u64> c(f.coeffs().begin(), f.coeffs().end());
  c[0] = 1;
  const ModPoly F(kMod, std::move(c));
  MulThresholds t;
  t.newton_base = static_cast<std::size_t>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(series_inverse(F, n, t));
}

}  // namespace

BENCHMARK(BM_schoolbook)->RangeMultiplier(2)->Range(8, 256);
BENCHMARK(BM_kronecker)->RangeMultiplier(2)->Range(8, 1 << 17);
BENCHMARK(BM_schonhage)->ArgsProduct({benchmark::CreateRange(1 << 10, 1 << 20, 4), {8, 16, 32, 64}});
BENCHMARK(BM_negacyclic)->ArgsProduct({{16, 32, 64, 128, 256, 512, 1024}, {8, 16, 32, 64, 1024}});
BENCHMARK(BM_middle_slice)->RangeMultiplier(4)->Range(256, 1 << 18);
BENCHMARK(BM_middle_transposed)->RangeMultiplier(4)->Range(256, 1 << 18);
BENCHMARK(BM_inverse)->ArgsProduct({{1 << 12, 1 << 16}, {8, 16, 32, 64, 128}});

BENCHMARK_MAIN();
