// Serial reference vs OpenMP kernel, on the synthetic fixtures.
#include <benchmark/benchmark.h>

#include "canned/fixtures.hpp"
#include "canned/pipeline.hpp"
#include "canned/scoring.hpp"
#include "canned/selection.hpp"
#include "canned/tir_patterns.hpp"
#include "canned/tor_patterns.hpp"
#include "canned/truss.hpp"

using namespace canned;

namespace {

const Graph& social() {
  static const Graph g = social_fixture(7, 20000);
  return g;
}

const DecompositionResult& collab() {
  static const DecompositionResult r = decompose(collab_fixture(7, 8000, 3600), 15);
  return r;
}

const std::vector<ScoredCandidate>& pool() {
  static const std::vector<ScoredCandidate> p = [] {
    const auto& r = collab();
    auto c = generate_candidates(r, 5, 3, 15);
    return score_candidates(prune(c.patterns, Plug{}, 3), c.regions);
  }();
  return p;
}

void BM_SupportSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(edge_supports_serial(social()));
}
void BM_SupportParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(edge_supports(social()));
}

void BM_CompositeSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(count_composite_serial(collab(), 15));
}
void BM_CompositeParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(count_composite(collab(), 15));
}

void BM_StarsSerial(benchmark::State& s) {
  static const Graph g_o = decompose(social(), 15).g_o;
  for (auto _ : s) benchmark::DoNotOptimize(star_census_serial(g_o, 5, 15));
}
void BM_StarsParallel(benchmark::State& s) {
  static const Graph g_o = decompose(social(), 15).g_o;
  for (auto _ : s) benchmark::DoNotOptimize(star_census(g_o, 5, 15));
}

// The fixture pool repeated to the requested size.
std::vector<ScoredCandidate> sized_pool(std::size_t n) {
  std::vector<ScoredCandidate> out;
  while (out.size() < n) out.push_back(pool()[out.size() % pool().size()]);
  return out;
}

// Rescoring with one committed member, the state of every greedy round after the first.
template <bool Parallel>
void BM_Rescore(benchmark::State& s) {
  const auto p = sized_pool(static_cast<std::size_t>(s.range(0)));
  PoolScorer sc(p);
  sc.commit(0);
  std::vector<char> available(sc.size(), 1);
  available[0] = 0;
  std::vector<double> out(sc.size());
  for (auto _ : s) {
    if (Parallel) sc.rescore(available, out);
    else sc.rescore_serial(available, out);
    benchmark::DoNotOptimize(out.data());
  }
  s.counters["pool"] = static_cast<double>(sc.size());
}

}  // namespace

BENCHMARK(BM_SupportSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SupportParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompositeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompositeParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StarsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StarsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rescore<false>)->Name("BM_RescoreSerial")->Arg(64)->Arg(4096)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Rescore<true>)->Name("BM_RescoreParallel")->Arg(64)->Arg(4096)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
