#include <benchmark/benchmark.h>

#include "ktsim/coloring/eps_delta.hpp"
#include "ktsim/graph/generators.hpp"
#include "ktsim/hash/poly_hash.hpp"
#include "ktsim/mis/kt2_mis.hpp"
#include "ktsim/mis/luby.hpp"

using namespace ktsim;

static void BM_GenerateRandomGraph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generate_random_graph(n, 0.5, ++seed));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * (n - 1) / 2));
}
BENCHMARK(BM_GenerateRandomGraph)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

static void BM_PolynomialHashEval(benchmark::State& state) {
  const auto params = HashFamilyParams::make(1u << 22, 1u << 11, static_cast<unsigned>(state.range(0)));
  const auto h = PolynomialHash::sample(params, BitString::random(bits_required(params), 7));
  std::uint64_t x = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(h(x));
    x = (x + 7919) % params.domain_size;
  }
}
BENCHMARK(BM_PolynomialHashEval)->Arg(2)->Arg(44);

// Engine throughput: Luby moves ~2m envelopes per iteration.
static void BM_LubyEngine(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = generate_random_graph(n, 0.1, 3);
  std::uint64_t seed = 0;
  std::uint64_t envelopes = 0;
  for (auto _ : state) {
    const auto r = luby_mis(g, ++seed);
    envelopes += r.metrics.envelopes;
  }
  state.counters["envelopes/s"] = benchmark::Counter(static_cast<double>(envelopes), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_LubyEngine)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

static void BM_EpsColoring(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = generate_random_graph(n, 0.5, 5);
  const auto ids = IdAssignment::random(n, 5);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(alg2_eps_delta(g, ids, {}, ++seed));
}
BENCHMARK(BM_EpsColoring)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_Kt2Mis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = generate_random_graph(n, 0.5, 9);
  const auto ids = IdAssignment::random(n, 9);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(alg3_kt2_mis(g, ids, {}, ++seed));
}
BENCHMARK(BM_Kt2Mis)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
