#pragma once

#include <map>
#include <vector>

#include "canned/graph.hpp"
#include "canned/pattern.hpp"

namespace canned {

struct StarCensus {
  std::map<int, std::uint64_t> stars;                  // leaves -> freq
  std::map<std::vector<int>, std::uint64_t> asterisms;  // canonical center degrees -> freq
};

// Orientation-free key: the lexicographically smaller of d and reverse(d).
std::vector<int> canonical_centers(std::vector<int> d);

StarCensus star_census_serial(const Graph& g_o, int epsilon, int eta_max);
StarCensus star_census(const Graph& g_o, int epsilon, int eta_max);

struct StarPatterns {
  std::vector<Pattern> stars;
  std::vector<Pattern> asterisms;
};
StarPatterns gen_star_patterns(const Graph& g_o, int epsilon, int eta_max);

// G_R: g_o minus every edge incident to a vertex of degree >= epsilon.
Graph remove_star_edges(const Graph& g_o, int epsilon);

// Degree-census classification of one connected component.
enum class ComponentShape { Path, Cycle, Other };
ComponentShape classify_component(std::size_t vertices, std::size_t deg1, std::size_t deg2);

std::vector<Pattern> gen_small_patterns(const Graph& g_r, int eta_min, int eta_max);

}  // namespace canned
