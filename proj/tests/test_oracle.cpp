#include <algorithm>

#include "canned/fixtures.hpp"
#include "canned/oracle.hpp"
#include "canned/rng.hpp"
#include "canned/selection.hpp"
#include "canned/tir_patterns.hpp"
#include "canned/tor_patterns.hpp"
#include "doctest.h"

using namespace canned;

namespace {

std::vector<SmallGraph> small_universe() {
  return {make_path(3),          make_star(4),   make_cycle(5),   chord_pattern(4).graph,
          make_cycle(3),         make_path(4),   make_cycle(4),   make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})};
}

std::vector<ScoredCandidate> scored_pool(std::uint64_t seed, std::size_t n) {
  auto rng = substream(seed, "pool");
  std::vector<Pattern> ps;
  for (int k = 4; k <= 7; ++k) ps.push_back(chord_pattern(k));
  for (int k = 5; k <= 9; ++k) ps.push_back(star_pattern(k));
  for (int k = 3; k <= 6; ++k) ps.push_back(path_pattern(k));
  ps.push_back(cycle_pattern(5));
  ps.push_back(cycle_pattern(6));
  std::shuffle(ps.begin(), ps.end(), rng);
  ps.resize(n);
  for (auto& p : ps) p.freq = 1 + rng() % 500;
  return score_candidates(ps, RegionSizes{400, 600});
}

}  // namespace

TEST_CASE("exact coverage") {
  CHECK(exact_coverage({make_cycle(3)}, make_clique(4)) == 6);
  CHECK(exact_coverage({make_cycle(5)}, make_path(8)) == 0);
  // C_4 (two triangles on a chord) inside the NO(4,4) composite: the three
  // diamonds on chords (a,v), (a,b) and (a,x) reach all nine edges.
  auto no = composite_pattern(CcpKind::NO, 4, 4, 15).graph;
  CHECK(exact_coverage({chord_pattern(4).graph}, no) == 9);
  CHECK_THROWS_AS(exact_coverage({make_cycle(3)}, make_path(80)), SizeGuard);
}

TEST_CASE("coverage bound against exact coverage") {
  // Pure TIR graph: C_k frequency counts every edge that can anchor a C_k.
  for (std::size_t n = 4; n <= 7; ++n) {
    auto g = make_clique(n);
    auto r = decompose(g, 15);
    for (const auto& p : gen_chord_patterns(r)) {
      const double ub = coverage_upper_bound(p, r.g_t.edge_count(), r.total_edges());
      CHECK(static_cast<double>(exact_coverage({p.graph}, g)) <= ub);
    }
  }
  // The bound is not an upper bound in general: a diamond holds an embedding
  // of C_4 although none of its edges has trussness 4.
  auto diamond = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  auto r = decompose(diamond, 15);
  CHECK(chord_frequencies(r).size() == 4);
  CHECK(exact_coverage({chord_pattern(4).graph}, diamond) == 5);
}

TEST_CASE("set function properties") {
  SetFunctions f(small_universe(), erdos_renyi(22, 0.18, 4));
  for (SetMetric m : {SetMetric::Coverage, SetMetric::PairwiseSimilarity, SetMetric::CognitiveLoad}) {
    auto rep = check_submodularity(f, m, 1500, 11);
    CHECK_MESSAGE(rep.violations == 0, metric_name(m), " ", rep.witness);
  }
  auto s = check_submodularity(f, SetMetric::Score, 1500, 11);
  CHECK(s.violations == 0);
  CHECK(s.min_value >= 0.0);
  CHECK(s.max_value <= 1.0);
  CHECK(s.increases > 0);
  CHECK(s.decreases > 0);
}

TEST_CASE("a pattern with no coverage lowers the score") {
  SetFunctions f({make_cycle(3), make_cycle(5)}, make_clique(4));
  CHECK(f.coverage(0b01) == 1.0);
  CHECK(f.coverage(0b10) == 0.0);
  CHECK(f.score(0b11) < f.score(0b01));
}

TEST_CASE("brute-force optimum dominates greedy runs") {
  auto pool = scored_pool(3, 8);
  for (int gamma : {2, 3}) {
    auto opt = brute_force_opt(pool, gamma);
    CHECK(opt.members.size() <= static_cast<std::size_t>(gamma));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      auto set = select(pool, Plug{3, 15, gamma, {}}, seed);
      REQUIRE(!set.score_trace.empty());
      CHECK(set.score_trace.back().s <= opt.score + 1e-12);
    }
  }
  // With gamma = |pool| the optimum is at least the full set.
  std::vector<const ScoredCandidate*> all;
  for (const auto& c : pool) all.push_back(&c);
  CHECK(brute_force_opt(pool, 8).score >= set_score(all).s);
  CHECK_THROWS_AS(brute_force_opt(scored_pool(3, 15), 0), std::invalid_argument);
}

TEST_CASE("brute force guard") {
  std::vector<ScoredCandidate> big(60);
  for (auto& c : big) c.pattern = chord_pattern(4);
  CHECK_THROWS_AS(brute_force_opt(big, 6), SizeGuard);
}
