#include <benchmark/benchmark.h>

#include "wplat/binary_tree.hpp"
#include "wplat/lattice.hpp"
#include "wplat/series.hpp"
#include "wplat/stirling.hpp"

using namespace wplat;

static void BM_EnumerateAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(n, k));
}
BENCHMARK(BM_EnumerateAll)->Args({5, 2})->Args({6, 2})->Args({5, 3})->Args({7, 1});

static void BM_BuildPoset(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_poset(n, k));
}
BENCHMARK(BM_BuildPoset)->Args({4, 2})->Args({5, 2})->Args({4, 3})->Args({6, 1});

static void BM_VerifyEL(benchmark::State& state) {
  const auto P = build_poset(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_el(P));
}
BENCHMARK(BM_VerifyEL)->Args({3, 2})->Args({4, 2})->Args({3, 3});

static void BM_MobiusRecursive(benchmark::State& state) {
  const auto P = build_poset(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(mobius_recursive(P, P.bottom(), P.top()));
}
BENCHMARK(BM_MobiusRecursive)->Args({4, 2})->Args({5, 2})->Args({4, 3});

static void BM_ExpK(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0)), N = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(exp_k_xy(k, N));
}
BENCHMARK(BM_ExpK)->Args({2, 8})->Args({3, 8})->Args({3, 12});

static void BM_LogK(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0)), N = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(log_k_xy(k, N));
}
BENCHMARK(BM_LogK)->Args({2, 8})->Args({3, 8});

static void BM_TDef(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int r = 1; r <= n; ++r) benchmark::DoNotOptimize(T_def(n, 3, r));
}
BENCHMARK(BM_TDef)->Arg(8)->Arg(12);

static void BM_EnumerateLbt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lbt(n, k, LbtScope::Ordered));
}
BENCHMARK(BM_EnumerateLbt)->Args({4, 3})->Args({5, 2})->Args({6, 1});
BENCHMARK_MAIN();
