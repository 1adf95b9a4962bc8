#pragma once

#include <map>
#include <string>
#include <vector>

#include "canned/graph.hpp"
#include "canned/isomorphism.hpp"
#include "canned/queries.hpp"

namespace canned {

// Steps of a pattern-at-a-time construction. Every count is one GUI action.
struct StepCounts {
  std::size_t placements = 0;
  std::size_t merges = 0;     // sum over vertices of (placements covering it - 1)
  std::size_t nodes = 0;      // vertices no placement covers
  std::size_t edges = 0;      // edges no placement covers
  std::size_t deletions = 0;  // placed pattern edges absent from the query
  std::size_t total() const { return placements + merges + nodes + edges + deletions; }
};

// Edge-at-a-time cost: one step per vertex and per edge.
std::size_t edge_at_a_time_steps(const SmallGraph& q);
double reduction_ratio(std::size_t step_total, std::size_t step_p);

struct NamedPattern {
  std::string id;
  SmallGraph graph;
  bool is_default = false;
};

struct Placement {
  std::string pattern_id;
  Embedding map;                 // pattern vertex -> query vertex
  std::vector<EdgeIndex> edges;  // query edges covered
};

struct StepPlan {
  std::vector<Placement> placements;
  StepCounts counts;
  std::size_t step_p() const { return counts.total(); }
};

struct TilingOptions {
  std::size_t embedding_cap = 64;  // embeddings examined per pattern per step
  std::size_t forced_starts = 8;   // largest patterns tried as the first placement
};

// Greedy edge-disjoint tiling with a few restarts; returns the cheapest plan.
StepPlan greedy_plan(const SmallGraph& q, const std::vector<NamedPattern>& patterns,
                     const TilingOptions& opt = {});

// Hand-written plan: each placement maps a pattern into q. Pattern edges that
// land on non-edges of q are deletions. Throws if placements share a query edge
// or a mapping is not injective.
struct ScriptedPlacement {
  const SmallGraph* pattern;
  Embedding map;
};
StepCounts evaluate_script(const SmallGraph& q, const std::vector<ScriptedPlacement>& plan);

struct MuEntry {
  std::string query_id;
  QueryTag tag = QueryTag::Random;
  std::size_t size = 0;
  std::size_t step_total = 0;
  std::size_t step_p = 0;
  double mu = 0;
};

struct MuReport {
  std::vector<MuEntry> entries;
  std::map<QueryTag, double> mean_by_tag;
  double mean = 0;
};

MuReport evaluate_queries(const std::vector<Query>& queries, const std::vector<NamedPattern>& patterns,
                          const TilingOptions& opt = {});

// "query_id<TAB>tag<TAB>size<TAB>step_total<TAB>step_p<TAB>mu" rows with a header.
void write_mu_table(const std::string& path, const MuReport& r);
void write_mu_summary(const std::string& path, const MuReport& r);

}  // namespace canned
