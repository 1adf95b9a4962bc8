#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "canned/graph.hpp"

namespace canned {

enum class QueryTag : std::uint8_t { Random, Path, Tree, Star, Cycle, Flower };
const char* tag_name(QueryTag t);
QueryTag parse_tag(const std::string& s);

struct Query {
  std::string id;
  QueryTag tag = QueryTag::Random;
  SmallGraph graph;
};

struct QueryMix {
  int random = 500;
  int path = 100;
  int tree = 100;
  int star = 100;
  int cycle = 100;
  int flower = 100;
  int min_edges = 4;
  int max_edges = 30;

  int count(QueryTag t) const;
  int total() const { return random + path + tree + star + cycle + flower; }
};

// Random connected subgraph grown edge by edge from a uniform start vertex;
// may stop short of `edges` when the component is small.
SmallGraph random_connected_subgraph(const Graph& g, std::size_t edges, std::mt19937_64& rng);

// Samples connected subgraphs of g shaped per tag. A tag that keeps failing
// is skipped and reported through warnings.
std::vector<Query> generate_queries(const Graph& g, const QueryMix& mix, std::uint64_t seed,
                                    std::vector<std::string>* warnings = nullptr);

}  // namespace canned
