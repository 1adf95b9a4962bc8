#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>

#include "canned/truss.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace canned;

TEST_CASE("small graphs") {
  auto tri = decompose(make_cycle(3), 15);
  CHECK(tri.g_t.edge_count() == 3);
  for (auto t : tri.t_of_gt) CHECK(t == 3);
  CHECK(tir_fraction(tri) == 1.0);

  auto path = decompose(make_path(5), 15);
  CHECK(path.g_t.edge_count() == 0);
  CHECK(path.g_o.edge_count() == 5);
  CHECK(tir_fraction(path) == 0.0);

  auto k4 = decompose(make_clique(4), 15);
  for (auto t : k4.t_of_gt) CHECK(t == 4);

  auto k6 = decompose(make_clique(6), 15);
  for (auto t : k6.t_of_gt) CHECK(t == 6);
}

TEST_CASE("trussness is capped at eta_max") {
  auto r = decompose(make_clique(8), 5);
  for (auto t : r.t_of_gt) CHECK(t == 5);
  CHECK_THROWS_AS(decompose(make_clique(3), 2), std::invalid_argument);
}

TEST_CASE("empty graph has no split") {
  auto r = decompose(Graph::from_edges(3, {}), 15);
  CHECK_THROWS_AS(tir_fraction(r), std::domain_error);
}

TEST_CASE("peeling matches the k-truss oracle") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = oracle::random_graph(seed, 30);
    auto want = oracle::brute_trussness(g);
    auto got = peel_trussness(g);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(static_cast<int>(got[i]) == want[i]);
    CHECK(peel_trussness(g, false) == got);
  }
}

TEST_CASE("trussness does not depend on vertex order") {
  auto g = oracle::random_graph(11, 30);
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64(5));
  std::vector<std::pair<VertexId, VertexId>> e;
  for (const auto& x : g.edges()) e.emplace_back(perm[x.u], perm[x.v]);
  auto h = Graph::from_edges(g.vertex_count(), e);
  auto rg = decompose(g, 15), rh = decompose(h, 15);
  for (const auto& x : g.edges()) CHECK(rg.trussness(x.u, x.v) == rh.trussness(perm[x.u], perm[x.v]));
}

TEST_CASE("g_t and g_o partition the edges") {
  auto g = oracle::random_graph(21, 50);
  auto r = decompose(g, 15);
  CHECK(r.total_edges() == g.edge_count());
  for (const auto& e : r.g_t.edges()) CHECK_FALSE(r.g_o.has_edge(e.u, e.v));
}

TEST_CASE("trussness dump round trip") {
  auto lg = parse_edge_list("1 2\n2 3\n3 1\n3 4\n4 5\n1 4\n");
  auto r = decompose(lg.graph, 15);
  const std::string path = "truss_roundtrip.txt";
  write_trussness_dump(path, r, &lg.original_id);
  auto back = load_trussness_dump(path, 15);
  CHECK(back.graph.original_id == lg.original_id);
  CHECK(back.result.g_t.edges() == r.g_t.edges());
  CHECK(back.result.g_o.edges() == r.g_o.edges());
  CHECK(back.result.t_of_gt == r.t_of_gt);
  std::remove(path.c_str());
}
