#include <benchmark/benchmark.h>

#include "mergecut/fpt.hpp"
#include "mergecut/greedy.hpp"
#include "mergecut/kcut_dp.hpp"
#include "mergecut/oracle.hpp"

namespace {

using namespace mergecut;

void BM_Greedy(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const NumString s = gen_instance(1, n, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_b_partition(s, 5000).piece_count);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Greedy)->RangeMultiplier(2)->Range(1 << 16, 1 << 20)->Complexity(benchmark::oN);

template <InnerSearch Search, Execution Exec>
void BM_DpTables(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PointSet p = to_points(gen_instance(2, n, 1000));
  const auto j = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fill_dp_tables(p, j, Search, Exec).d(n + 1, j));
}
BENCHMARK(BM_DpTables<InnerSearch::binary, Execution::serial>)
    ->Args({1024, 64})->Args({1024, 1020})->Args({4096, 256});
BENCHMARK(BM_DpTables<InnerSearch::binary, Execution::parallel>)
    ->Args({1024, 64})->Args({1024, 1020})->Args({4096, 256});
BENCHMARK(BM_DpTables<InnerSearch::linear, Execution::serial>)->Args({1024, 64})->Args({4096, 256});

void BM_Fpt(benchmark::State& state, bool parallel) {
  const NumString s = gen_instance(3, 1024, 1000);
  FptOptions options;
  options.parallel = parallel;
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(maxmin_merge_fpt(s, k, options).value);
}
BENCHMARK_CAPTURE(BM_Fpt, serial, false)->DenseRange(4, 18, 2);
BENCHMARK_CAPTURE(BM_Fpt, parallel, true)->DenseRange(4, 18, 2);

void BM_DpMerge(benchmark::State& state) {
  const NumString s = gen_instance(3, 1024, 1000);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cut_string_dp(s, s.size() - k, Execution::serial).value);
  }
}
BENCHMARK(BM_DpMerge)->DenseRange(4, 18, 2);

void BM_SearchMerge(benchmark::State& state) {
  const NumString s = gen_instance(3, 1024, 1000);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(maxmin_merge_by_search(s, k).value);
}
BENCHMARK(BM_SearchMerge)->DenseRange(4, 18, 2);

}  // namespace

BENCHMARK_MAIN();
