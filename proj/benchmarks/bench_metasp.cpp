#include <benchmark/benchmark.h>

#include "metasp/classify.hpp"
#include "metasp/hecke.hpp"
#include "metasp/oracle.hpp"

using namespace metasp;

static void BM_Hilbert(benchmark::State& state) {
  const auto F = LocalField::make(7);
  int acc = 0;
  for (auto _ : state)
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) acc += hilbert(SquareClass::from_index(x), SquareClass::from_index(y), F);
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_Hilbert);

static void BM_EnumerateA(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_A(lambda_alpha(n, n)).elements.size());
}
BENCHMARK(BM_EnumerateA)->DenseRange(2, 5);

static void BM_CountCosetsSL2(benchmark::State& state) {
  OracleOptions opts;
  opts.threads = 1;
  opts.check_stability = false;
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_cosets_at_depth(Cocharacter({0}), Cocharacter({-2}), depth, GroupTag::SL2, 5, opts));
}
BENCHMARK(BM_CountCosetsSL2)->DenseRange(2, 5)->UseRealTime();

static void BM_Sp4Row(benchmark::State& state) {
  OracleOptions opts;
  opts.threads = static_cast<int>(state.range(1));
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(reductive_satake_row(Cocharacter({-2, -2}), 4, GroupTag::Sp4, p, opts));
}
BENCHMARK(BM_Sp4Row)->Args({3, 1})->Args({3, 0})->Args({5, 0})->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_ClassifyTorus(benchmark::State& state) {
  const auto F = LocalField::make(3);
  const auto G = ValueGroup::make_default(F);
  const int n = static_cast<int>(state.range(0));
  const GenuineTorusCharacter s{std::vector<SmoothCharacterFx>(n, SmoothCharacterFx::trivial(G)), {}};
  for (auto _ : state) benchmark::DoNotOptimize(composition_factors(torus_datum(s)).size());
}
BENCHMARK(BM_ClassifyTorus)->DenseRange(2, 8, 2);

BENCHMARK_MAIN();
