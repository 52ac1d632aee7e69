#include <benchmark/benchmark.h>

#include "curalg/character_families.hpp"
#include "curalg/homological.hpp"
#include "curalg/presentation.hpp"
#include "curalg/tilting.hpp"

using namespace curalg;

static void BM_DeltaCharacter(benchmark::State& state) {
  RootDatum d = RootDatum::build('A', 2);
  Weight lam({static_cast<int>(state.range(0)), 1});
  for (auto _ : state) {
    clear_character_cache();
    benchmark::DoNotOptimize(delta_character(d, lam, 0));
  }
}
BENCHMARK(BM_DeltaCharacter)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_LocalWeylClosure(benchmark::State& state) {
  auto g = lie_algebra('A', 1);
  Weight lam({static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(local_weyl_module(g, lam, 0));
}
BENCHMARK(BM_LocalWeylClosure)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_GlobalWeylSliceA2(benchmark::State& state) {
  auto g = lie_algebra('A', 2);
  for (auto _ : state) benchmark::DoNotOptimize(global_weyl_slice(g, Weight({1, 1}), 0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GlobalWeylSliceA2)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Ext1FromDelta(benchmark::State& state) {
  auto g = lie_algebra('A', 1);
  TruncatedModule n = nabla_slice(g, Weight({2}), 0, -static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ext1_from_delta(Weight({0}), -1, n).dimension);
}
BENCHMARK(BM_Ext1FromDelta)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_BuildTilting(benchmark::State& state) {
  RootDatum d = RootDatum::build('A', 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_tilting(d, Weight({2}), -static_cast<int>(state.range(0))).window.dim());
}
BENCHMARK(BM_BuildTilting)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
