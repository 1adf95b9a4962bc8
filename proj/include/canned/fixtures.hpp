#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "canned/graph.hpp"

namespace canned {

// Synthetic stand-ins for the benchmark networks, generated from a seed.
//   social: power-law graph with triad closure plus pendant trees, stars and cycles
//   road:   perforated grid with a few diagonals and hub junctions
//   collab: union of small random cliques (co-authorship style, truss heavy)
Graph social_fixture(std::uint64_t seed, std::size_t n = 3000);
Graph road_fixture(std::uint64_t seed, std::size_t side = 50);
Graph collab_fixture(std::uint64_t seed, std::size_t n = 2000, std::size_t groups = 900);

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

struct NamedFixture {
  std::string name;
  Graph graph;
};
std::vector<NamedFixture> standard_fixtures(std::uint64_t seed = 7);

// Identity id table, for writing generated graphs as edge lists.
LoadedGraph as_loaded(Graph g);

}  // namespace canned
