#include <random>

#include "canned/graph.hpp"
#include "canned/isomorphism.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace canned;

TEST_CASE("edge list parsing") {
  auto lg = parse_edge_list("# comment\n10 20\n20 30\n\n30 10\n10 20\n");
  CHECK(lg.graph.vertex_count() == 3);
  CHECK(lg.graph.edge_count() == 3);
  CHECK(lg.original_id == std::vector<std::int64_t>{10, 20, 30});

  SUBCASE("self loop only line adds nothing") {
    auto g = parse_edge_list("1 1\n").graph;
    CHECK(g.vertex_count() == 0);
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("self loop is dropped") {
    auto g = parse_edge_list("1 2\n2 3\n3 1\n1 1\n").graph;
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
  }
  SUBCASE("malformed line reports its number") {
    try {
      parse_edge_list("1 2\n2 x\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
}

TEST_CASE("support") {
  auto k4 = make_clique(4);
  for (const auto& e : k4.edges()) CHECK(support(k4, e) == 2);
  auto p = make_path(4);
  for (const auto& e : p.edges()) CHECK(support(p, e) == 0);
  auto tri = make_cycle(3);
  for (const auto& e : tri.edges()) CHECK(support(tri, e) == 1);
  CHECK_THROWS_AS(support(tri, EdgeId(0, 5)), std::invalid_argument);
}

TEST_CASE("support sums to three times the triangle count") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = oracle::random_graph(seed, 40);
    auto s = edge_supports(g);
    std::size_t sum = 0;
    for (auto x : s) sum += x;
    CHECK(sum == 3 * oracle::brute_triangles(g));
    CHECK(s == edge_supports_serial(g));
  }
}

TEST_CASE("edge list round trip keeps original ids") {
  auto lg = parse_edge_list("5 9\n9 100\n100 5\n7 5\n");
  const std::string path = "graph_roundtrip.txt";
  write_edge_list(path, lg);
  auto back = load_edge_list(path);
  CHECK(back.original_id == lg.original_id);
  CHECK(back.graph.edges() == lg.graph.edges());
  std::remove(path.c_str());
}

TEST_CASE("components") {
  auto g = make_graph(6, {{0, 1}, {1, 2}, {3, 4}});
  std::uint32_t count = 0;
  auto c = g.components(&count);
  CHECK(count == 3);
  CHECK(c[0] == c[2]);
  CHECK(c[3] == c[4]);
  CHECK(c[5] != c[0]);
  CHECK_FALSE(g.is_connected());
  CHECK(make_cycle(5).is_connected());
}

TEST_CASE("isomorphism agrees with permutation search") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng() % 4;
    auto rnd = [&] {
      std::vector<std::pair<VertexId, VertexId>> e;
      for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
          if (rng() % 2) e.emplace_back(a, b);
      return Graph::from_edges(n, e);
    };
    auto a = rnd(), b = rnd();
    CHECK(are_isomorphic(a, b) == oracle::permutation_isomorphic(a, b));
    if (are_isomorphic(a, b)) CHECK(invariant_hash(a) == invariant_hash(b));
    CHECK(are_isomorphic(a, a));
  }
}

TEST_CASE("relabeled graphs are isomorphic") {
  auto a = make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
  auto b = make_graph(5, {{4, 3}, {3, 2}, {2, 4}, {4, 0}, {0, 1}});
  CHECK(are_isomorphic(a, b));
  CHECK(are_isomorphic(b, a));
  CHECK_FALSE(are_isomorphic(make_path(4), make_star(4)));
}

TEST_CASE("subgraph embeddings") {
  auto tri = make_cycle(3);
  auto k4 = make_clique(4);
  auto m = find_embedding(tri, k4);
  REQUIRE(m);
  for (const auto& e : tri.edges()) CHECK(k4.has_edge((*m)[e.u], (*m)[e.v]));
  CHECK_FALSE(find_embedding(tri, make_star(5)));
  CHECK_FALSE(find_embedding(make_cycle(4), make_path(6)));
  // K4 on 4 vertices has 4! = 24 automorphic copies of itself.
  std::size_t count = enumerate_embeddings(k4, k4, [](const Embedding&) { return true; });
  CHECK(count == 24);
  // Forbidding one K4 edge removes every triangle through it.
  std::set<EdgeId> forbid{EdgeId(0, 1)};
  auto m2 = find_embedding(tri, k4, forbid);
  REQUIRE(m2);
  auto used = embedded_edges(tri, k4, *m2);
  for (auto e : used) CHECK(k4.edge(e) != EdgeId(0, 1));
}
