#include <benchmark/benchmark.h>

#include <random>

#include "hbgrowth/spectral.hpp"
#include "hbgrowth/tightening.hpp"

using namespace hbg;

namespace {

const NonNegMatrix kPaperM =
    NonNegMatrix::from_rows({{3, 1, 1, 0}, {4, 1, 3, 2}, {1, 0, 2, 1}, {1, 0, 1, 1}});

NonNegMatrix random_irreducible(int dim, uint32_t seed) {
  std::mt19937 rng(seed);
  NonNegMatrix m;
  m.dim = dim;
  m.entries.assign(static_cast<size_t>(dim) * dim, 0);
  for (int i = 0; i < dim; ++i) m.at(i, (i + 1) % dim) = 1;
  std::uniform_int_distribution<int> coin(0, 9), value(1, 5);
  for (long long& e : m.entries) {
    if (coin(rng) < 4) e += value(rng);
  }
  return m;
}

}  // namespace

static void PFEigenPaperMatrix(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pf_eigen(kPaperM));
  }
}
BENCHMARK(PFEigenPaperMatrix);

static void PFEigenRandom(benchmark::State& state) {
  const NonNegMatrix m = random_irreducible(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pf_eigen(m));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(PFEigenRandom)->RangeMultiplier(2)->Range(4, 32)->Complexity();

static void SCCDecomposition(benchmark::State& state) {
  const NonNegMatrix m = random_irreducible(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(scc_decomposition(m));
  }
}
BENCHMARK(SCCDecomposition)->Arg(8)->Arg(32);

static void ExactPower(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_power(kPaperM, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(ExactPower)->Arg(5)->Arg(20)->Arg(50);

BENCHMARK_MAIN();
