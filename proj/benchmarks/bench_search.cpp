#include <benchmark/benchmark.h>

#include "posetpack/embedding.hpp"
#include "posetpack/oracle.hpp"
#include "posetpack/packing.hpp"

using namespace posetpack;

static void BM_MinimalClosureWeakJ(benchmark::State& state) {
  Poset j = Poset::j();
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_closure(j, EmbedMode::Weak));
  }
}
BENCHMARK(BM_MinimalClosureWeakJ);

static void BM_MinimalClosureStrongJ(benchmark::State& state) {
  Poset j = Poset::j();
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_closure(j, EmbedMode::Strong));
  }
}
BENCHMARK(BM_MinimalClosureStrongJ);

static void BM_EnumerateCopiesV(benchmark::State& state) {
  Poset v = Poset::v();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_copies(v, n, EmbedMode::Weak));
  }
}
BENCHMARK(BM_EnumerateCopiesV)->Arg(3)->Arg(4);

static void BM_PaExactChain(benchmark::State& state) {
  Poset p1 = Poset::chain(1);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pa_exact(p1, n, EmbedMode::Weak));
  }
}
BENCHMARK(BM_PaExactChain)->Arg(3)->Arg(4);

static void BM_MaterializeAndVerify(benchmark::State& state) {
  Embedding v{Poset::v(), 2, EmbedMode::Weak, {0b00, 0b01, 0b10}};
  PackingPlan plan = build_plan(v, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    auto copies = materialize(plan);
    benchmark::DoNotOptimize(verify_copies(copies, plan));
  }
}
BENCHMARK(BM_MaterializeAndVerify)->Arg(12)->Arg(14);

BENCHMARK_MAIN();
