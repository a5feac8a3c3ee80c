#include <benchmark/benchmark.h>

#include "hbgrowth/freegroup.hpp"
#include "hbgrowth/penner.hpp"
#include "hbgrowth/tightening.hpp"

using namespace hbg;

namespace {

const NonNegMatrix kPaperM =
    NonNegMatrix::from_rows({{3, 1, 1, 0}, {4, 1, 3, 2}, {1, 0, 2, 1}, {1, 0, 1, 1}});

PennerPair torus_pair() {
  PennerPair p;
  p.surface = {1, 1};
  p.curves_c = {"a0"};
  p.curves_d = {"a1"};
  p.inter = {0, 1, 1, 0};
  p.cert_no_parallel = true;
  p.cert_fills = true;
  return p;
}

}  // namespace

static void SearchSwapCatalog(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_moves(kPaperM));
  }
}
BENCHMARK(SearchSwapCatalog);

static void EvaluatePaperMove(benchmark::State& state) {
  const TighteningMove move{1, {-2, 0, -2, 0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_move(kPaperM, move));
  }
}
BENCHMARK(EvaluatePaperMove);

static void PennerProductTorus(benchmark::State& state) {
  const PennerPair pair = torus_pair();
  TwistWord word;
  for (int k = 0; k < state.range(0); ++k) {
    word.push_back({"a0", -1});
    word.push_back({"a1", +1});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(penner_product(pair, word));
  }
}
BENCHMARK(PennerProductTorus)->Arg(1)->Arg(8);

static void FoldingSurjectivity(benchmark::State& state) {
  // a fixed automorphism given by a moderately long image set
  FreeEndomorphism e;
  e.rank = 3;
  e.images = {Word{{1, 2, -1, 3}}, Word{{2, 3}}, Word{{3}}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_surjective(e));
  }
}
BENCHMARK(FoldingSurjectivity);

BENCHMARK_MAIN();
