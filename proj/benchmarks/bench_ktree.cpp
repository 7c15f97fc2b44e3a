#include <benchmark/benchmark.h>

#include "ktree/canonical.hpp"
#include "ktree/char_tree.hpp"
#include "ktree/enumerate.hpp"
#include "ktree/generators.hpp"
#include "ktree/oracle.hpp"
#include "ktree/tree_poly.hpp"

using namespace ktree;

static void BM_CliqueCounts(benchmark::State& state) {
  const KTree t = random_ktree(2, static_cast<int>(state.range(0)), 1);
  const auto cliques = k_cliques(t);
  for (auto _ : state) {
    for (const Clique& c : cliques) benchmark::DoNotOptimize(clique_counts(t, c));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cliques.size()));
}
BENCHMARK(BM_CliqueCounts)->Arg(10)->Arg(20)->Arg(40);

static void BM_ExactCliqueMeans(benchmark::State& state) {
  const KTree t = random_ktree(2, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(all_clique_means(t));
}
BENCHMARK(BM_ExactCliqueMeans)->Arg(10)->Arg(20)->Arg(40);

static void BM_OracleCliqueMeans(benchmark::State& state) {
  const KTree t = random_ktree(2, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_all_clique_means(t));
}
BENCHMARK(BM_OracleCliqueMeans)->Arg(8)->Arg(12)->Arg(16);

static void BM_CanonicalCode(benchmark::State& state) {
  const KTree t = random_ktree(static_cast<int>(state.range(0)), 10, 1);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(t));
}
BENCHMARK(BM_CanonicalCode)->Arg(1)->Arg(2)->Arg(3);

static void BM_LabeledBuild(benchmark::State& state) {
  const std::uint64_t total = checked_labeled_count(2, 10);
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(labeled_ktree_at(2, 10, i));
    i = (i + 7919) % total;
  }
}
BENCHMARK(BM_LabeledBuild);

static void BM_TreeGlobalPoly(benchmark::State& state) {
  const KTree t = random_ktree(1, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(global_subtree_poly(t.graph()));
}
BENCHMARK(BM_TreeGlobalPoly)->Arg(10)->Arg(30)->Arg(60);
BENCHMARK_MAIN();
