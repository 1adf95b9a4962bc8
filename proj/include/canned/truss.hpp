#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "canned/graph.hpp"

namespace canned {

struct DecompositionResult {
  Graph g_t;                          // edges with trussness >= 3
  Graph g_o;                          // edges with trussness 2
  std::vector<std::uint8_t> t_of_gt;  // trussness per g_t edge index
  int eta_max = 0;

  // Trussness of an edge of the input graph (2 for g_o edges).
  int trussness(VertexId a, VertexId b) const;
  std::size_t total_edges() const { return g_t.edge_count() + g_o.edge_count(); }
};

// Uncapped trussness per edge index of g, by bucket-queue peeling.
std::vector<std::uint32_t> peel_trussness(const Graph& g, bool parallel_support = true);

DecompositionResult decompose(const Graph& g, int eta_max, bool parallel_support = true);

// |E(g_t)| / (|E(g_t)| + |E(g_o)|); throws on empty input.
double tir_fraction(const DecompositionResult& r);

// "u v trussness" per line; ids mapped through original_id when given.
void write_trussness_dump(const std::string& path, const DecompositionResult& r,
                          const std::vector<std::int64_t>* original_id = nullptr);

// Rebuilds a decomposition from a dump without re-peeling.
struct LoadedDecomposition {
  LoadedGraph graph;
  DecompositionResult result;
};
LoadedDecomposition load_trussness_dump(const std::string& path, int eta_max);

}  // namespace canned
