#include <benchmark/benchmark.h>

#include <random>

#include "posetpack/chains.hpp"
#include "posetpack/lattice.hpp"

using namespace posetpack;

namespace {

Family random_family(std::uint64_t seed, int n, int count) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> masks;
  masks.reserve(count);
  for (int i = 0; i < count; ++i) masks.push_back(rng() & full_mask(n));
  return Family(n, std::move(masks));
}

}  // namespace

static void BM_Closure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Family f = random_family(7, n, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure(f));
  }
}
BENCHMARK(BM_Closure)->Arg(12)->Arg(16)->Arg(20);

static void BM_ChainsThrough(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  Family f = random_family(11, 10, count);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chains_through(f));
  }
}
BENCHMARK(BM_ChainsThrough)->Arg(6)->Arg(12)->Arg(18);

static void BM_ChainsOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Family f = random_family(13, n, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chains_through_oracle(f));
  }
}
BENCHMARK(BM_ChainsOracle)->Arg(10)->Arg(14)->Arg(18);

static void BM_Abar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(abar_bruteforce(2, n));
  }
}
BENCHMARK(BM_Abar)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
