#include <benchmark/benchmark.h>

#include "hhodge/hodge.hpp"
#include "hhodge/series.hpp"

using namespace hhodge;

namespace {

void BM_CyclotomicProduct(benchmark::State& state) {
  const long n = state.range(0);
  Cyclotomic a = Cyclotomic::e(1, n) + Cyclotomic::e(2, n) * make_rational(3, 2);
  Cyclotomic b = Cyclotomic::e(-1, n) - Cyclotomic(make_rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicProduct)->Arg(4)->Arg(12)->Arg(60);

void BM_InduceCyclic(benchmark::State& state) {
  GroupPtr G = build_group("sym:4");
  const int m = G->element("(1234)");
  for (auto _ : state) benchmark::DoNotOptimize(induce_cyclic(*G, m, 1));
}
BENCHMARK(BM_InduceCyclic);

void BM_IIFSeries(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iif_series(r, 1, 4));
}
BENCHMARK(BM_IIFSeries)->Arg(2)->Arg(6);

void BM_EnumerateCutGraphs(benchmark::State& state) {
  GroupPtr G = build_group("sym:3");
  std::vector<int> m(static_cast<std::size_t>(state.range(0)), G->element("(123)"));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cut_graphs(2, static_cast<int>(m.size()), m, *G));
}
BENCHMARK(BM_EnumerateCutGraphs)->Arg(0)->Arg(2);

void BM_BchHurwitzHodge(benchmark::State& state) {
  GroupPtr G = build_group("sym:3");
  const int g = static_cast<int>(state.range(0));
  std::vector<int> m(static_cast<std::size_t>(state.range(1)), G->element("(12)"));
  ModuliContext ctx = make_context(G, g, m);
  for (auto _ : state) benchmark::DoNotOptimize(bch_hurwitz_hodge(ctx, G->whole()));
}
BENCHMARK(BM_BchHurwitzHodge)->Args({0, 4})->Args({1, 2})->Args({2, 1})->Unit(benchmark::kMillisecond);

void BM_VerifyCell(benchmark::State& state) {
  GroupPtr G = build_group("cyclic:4");
  ModuliContext ctx = make_context(G, 1, {1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(verify_identities(ctx, G->whole()));
}
BENCHMARK(BM_VerifyCell)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
