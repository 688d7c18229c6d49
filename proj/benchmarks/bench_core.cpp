#include <benchmark/benchmark.h>

#include "tkiss/ruler.hpp"
#include "tkiss/verifier.hpp"

using namespace tkiss;

static void BM_prefix_table(benchmark::State& state) {
  for (auto _ : state) {
    PrefixTable table(state.range(0));
    benchmark::DoNotOptimize(table.sums().back());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_prefix_table)->Arg(1 << 12)->Arg(1 << 20);

static void BM_lemma1_exhaustive(benchmark::State& state) {
  const PrefixTable table(4096);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_lemma1_violation(state.range(0), 4096, table));
  }
}
BENCHMARK(BM_lemma1_exhaustive)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_build_disk(benchmark::State& state) {
  const Int n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_disk(n, n));
  }
  state.SetItemsProcessed(state.iterations() * ((Int{1} << (n + 1)) - 1));
}
BENCHMARK(BM_build_disk)->DenseRange(4, 16, 4);

static void BM_union_interiors_disjoint(benchmark::State& state) {
  const Int n = state.range(0);
  const Scene scene = place_translates(n, n);
  const auto a = scene.translate_rects(0);
  const auto b = scene.translate_rects(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(union_interiors_disjoint(a, b));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<Int>(a.size() + b.size()));
}
BENCHMARK(BM_union_interiors_disjoint)->DenseRange(4, 16, 4);

static void BM_contact_components(benchmark::State& state) {
  const Int n = state.range(0);
  const Scene scene = place_translates(n, n);
  const auto a = scene.translate_rects(0);
  const auto b = scene.translate_rects(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(contact_components(a, b));
  }
}
BENCHMARK(BM_contact_components)->DenseRange(4, 16, 4);

static void BM_verify_construction(benchmark::State& state) {
  const Int n = state.range(0);
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_construction(n, n, {threads}));
  }
}
BENCHMARK(BM_verify_construction)
    ->ArgsProduct({{6, 10, 14}, {1, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
