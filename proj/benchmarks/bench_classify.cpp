#include <benchmark/benchmark.h>

#include "mdeg/automorphism.hpp"
#include "mdeg/classify.hpp"
#include "mdeg/exclusion.hpp"
#include "mdeg/semigroup.hpp"

namespace {

using namespace mdeg;

void BM_ExcludeAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exclude_all({5, 7, 9}));
}

void BM_ClassifyGrid(benchmark::State& state) {
  const i64 n = state.range(0);
  for (auto _ : state) {
    int unknown = 0;
    for (i64 a = 1; a <= n; ++a)
      for (i64 d = 0; d <= n; ++d)
        unknown += classify_ap(a, d).status == Status::Unknown;
    benchmark::DoNotOptimize(unknown);
  }
  state.SetItemsProcessed(state.iterations() * n * (n + 1));
}

void BM_Lemma31Grid(benchmark::State& state) {
  const i64 n = state.range(0);
  for (auto _ : state) {
    bool all = true;
    for (i64 a = 1; a <= n; ++a)
      for (i64 d = 0; d <= n; ++d) all &= lemma31_check(a, d).equal;
    benchmark::DoNotOptimize(all);
  }
  state.SetItemsProcessed(state.iterations() * n * (n + 1));
}

void BM_BuildAndVerifyWitness(benchmark::State& state) {
  for (auto _ : state) {
    auto witness = build_witness(4, 6, 8);
    benchmark::DoNotOptimize(verify_inverse(*witness));
  }
}

void BM_ReductionSearch(benchmark::State& state) {
  const auto witness = build_witness(2, 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(reduction_search(*witness, 3, 3));
}

}  // namespace

BENCHMARK(BM_ExcludeAll);
BENCHMARK(BM_ClassifyGrid)->Arg(30)->Arg(100);
BENCHMARK(BM_Lemma31Grid)->Arg(100);
BENCHMARK(BM_BuildAndVerifyWitness);
BENCHMARK(BM_ReductionSearch);
