#include <benchmark/benchmark.h>

#include "kroots/kroots.hpp"

using namespace kroots;

static void BM_EnumerateSn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t keys = 0;
    for (const auto& p : enumerate_sn(n)) keys ^= p.key();
    benchmark::DoNotOptimize(keys);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(factorial(n)));
}
BENCHMARK(BM_EnumerateSn)->DenseRange(5, 9);

static void BM_Theta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto pi = canonical_permutation(Partition::ones(n));
  for (auto _ : state) benchmark::DoNotOptimize(theta(6, pi));
}
BENCHMARK(BM_Theta)->DenseRange(5, 8);

static void BM_RhsSignedSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Partition mu({n});
  for (auto _ : state) benchmark::DoNotOptimize(rhs_signed_sum(6, mu));
}
BENCHMARK(BM_RhsSignedSum)->DenseRange(5, 8);

static void BM_CentralizerElements(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto lambda = Partition::from_unsorted(std::vector<int>(static_cast<std::size_t>(n / 2), 2));
  for (auto _ : state) benchmark::DoNotOptimize(centralizer_elements(lambda).size());
}
BENCHMARK(BM_CentralizerElements)->Arg(4)->Arg(6)->Arg(8);

static void BM_UnimodalCharacter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto shapes = partitions_of(n);
  const Partition mu({n - n / 2, n / 2});
  for (auto _ : state) {
    std::int64_t sum = 0;
    for (const auto& nu : shapes) sum += unimodal_character(nu, mu);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_UnimodalCharacter)->DenseRange(4, 9);

static void BM_Rsk(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (const auto& p : enumerate_sn(n)) benchmark::DoNotOptimize(rsk(p));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(factorial(n)));
}
BENCHMARK(BM_Rsk)->DenseRange(5, 7);

static void BM_RibbonFillings(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> odd;
  for (int i = 1; i < n; i += 2) odd.push_back(i);
  const auto shape = zigzag_shape(DescentSet(n, odd), n);
  for (auto _ : state) benchmark::DoNotOptimize(count_ribbon_fillings(shape));
}
BENCHMARK(BM_RibbonFillings)->RangeMultiplier(2)->Range(4, 16);
BENCHMARK_MAIN();
