#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "slowperc/apset.hpp"
#include "slowperc/constructions.hpp"
#include "slowperc/percolation.hpp"
#include "slowperc/verify.hpp"

using namespace slowperc;

namespace {

const ConstructionOutput& h6(std::int64_t n) {
  static std::map<std::int64_t, ConstructionOutput> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_h6(n)).first;
  return it->second;
}

const ConstructionOutput& hprime400() {
  static const ConstructionOutput c = build_hprime(400, ApSet(40, {1, 2, 4, 5}).scaled(10));
  return c;
}

void BM_RunH6(benchmark::State& state) {
  const auto& c = h6(state.range(0));
  const Graph host = Graph::complete(c.start.vertex_count());
  const bool incremental = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run(c.start, 6, host, {std::nullopt, incremental}).running_time);
  state.SetLabel(incremental ? "incremental" : "full-scan");
}
BENCHMARK(BM_RunH6)->ArgsProduct({{30, 50, 100}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_RunHprime400(benchmark::State& state) {
  const auto& c = hprime400();
  const Graph host = Graph::complete(c.start.vertex_count());
  const bool incremental = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run(c.start, 5, host, {std::nullopt, incremental}).running_time);
  state.SetLabel(incremental ? "incremental" : "full-scan");
}
BENCHMARK(BM_RunHprime400)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_RunRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::bernoulli_distribution coin(0.08);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  const Graph host = Graph::complete(n);
  for (auto _ : state) benchmark::DoNotOptimize(run(g, 4, host).running_time);
}
BENCHMARK(BM_RunRandom)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_CliqueSearch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  std::mt19937_64 rng(2);
  std::bernoulli_distribution coin(0.5);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  const auto all = VertexSet::all(n);
  CliqueFinder finder(g);
  for (auto _ : state) {
    std::size_t count = 0;
    finder.enumerate(all.words(), k, [&](const std::vector<Vertex>&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CliqueSearch)->Args({64, 4})->Args({128, 5});

void BM_InducedFreeHprime(benchmark::State& state) {
  const auto& c = hprime400();
  for (auto _ : state) benchmark::DoNotOptimize(check_induced_free(c.hypergraph, 5).passed);
}
BENCHMARK(BM_InducedFreeHprime)->Unit(benchmark::kMillisecond);

void BM_InducedFreeH6(benchmark::State& state) {
  const auto& c = h6(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_induced_free(c.hypergraph, 6).passed);
}
BENCHMARK(BM_InducedFreeH6)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
