#include <map>

#include "canned/fixtures.hpp"
#include "canned/queries.hpp"
#include "doctest.h"

using namespace canned;

namespace {

QueryMix only(QueryTag t, int n, int lo, int hi) {
  QueryMix m{0, 0, 0, 0, 0, 0, lo, hi};
  switch (t) {
    case QueryTag::Random: m.random = n; break;
    case QueryTag::Path: m.path = n; break;
    case QueryTag::Tree: m.tree = n; break;
    case QueryTag::Star: m.star = n; break;
    case QueryTag::Cycle: m.cycle = n; break;
    case QueryTag::Flower: m.flower = n; break;
  }
  return m;
}

bool is_path(const SmallGraph& g) {
  std::size_t d1 = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 2) return false;
    d1 += g.degree(v) == 1;
  }
  return g.is_connected() && d1 == 2 && g.edge_count() + 1 == g.vertex_count();
}

}  // namespace

TEST_CASE("tag names round trip") {
  for (QueryTag t : {QueryTag::Random, QueryTag::Path, QueryTag::Tree, QueryTag::Star, QueryTag::Cycle,
                     QueryTag::Flower})
    CHECK(parse_tag(tag_name(t)) == t);
  CHECK_THROWS(parse_tag("spiral"));
}

TEST_CASE("path queries are paths") {
  auto g = road_fixture(3, 30);
  auto qs = generate_queries(g, only(QueryTag::Path, 40, 6, 6), 5);
  REQUIRE(qs.size() == 40);
  for (const auto& q : qs) {
    CHECK(q.graph.edge_count() == 6);
    CHECK(is_path(q.graph));
  }
}

TEST_CASE("default mix on a fixture") {
  auto g = social_fixture(2, 1500);
  std::vector<std::string> warnings;
  auto qs = generate_queries(g, QueryMix{}, 9, &warnings);
  CHECK(warnings.empty());
  CHECK(qs.size() == 1000);
  std::map<QueryTag, int> per_tag;
  for (const auto& q : qs) {
    ++per_tag[q.tag];
    CHECK(q.graph.is_connected());
    CHECK(q.graph.edge_count() >= 4);
    CHECK(q.graph.edge_count() <= 30);
    if (q.tag == QueryTag::Tree) CHECK(q.graph.edge_count() + 1 == q.graph.vertex_count());
    if (q.tag == QueryTag::Cycle || q.tag == QueryTag::Flower)
      CHECK(q.graph.edge_count() >= q.graph.vertex_count());
  }
  CHECK(per_tag[QueryTag::Random] == 500);
  CHECK(per_tag[QueryTag::Flower] == 100);
}

TEST_CASE("generation is reproducible") {
  auto g = collab_fixture(4, 800, 300);
  auto a = generate_queries(g, QueryMix{20, 5, 5, 5, 5, 5, 4, 30}, 77);
  auto b = generate_queries(g, QueryMix{20, 5, 5, 5, 5, 5, 4, 30}, 77);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].graph.edges() == b[i].graph.edges());
  }
  auto c = generate_queries(g, QueryMix{20, 5, 5, 5, 5, 5, 4, 30}, 78);
  bool differs = false;
  for (std::size_t i = 0; i < std::min(a.size(), c.size()); ++i) differs |= a[i].graph.edges() != c[i].graph.edges();
  CHECK(differs);
}

TEST_CASE("unsatisfiable tags are skipped with a warning") {
  std::vector<std::string> warnings;
  auto qs = generate_queries(make_path(40), only(QueryTag::Cycle, 5, 4, 10), 1, &warnings);
  CHECK(qs.empty());
  CHECK(warnings.size() == 1);
  CHECK_THROWS_AS(generate_queries(Graph::from_edges(4, {}), QueryMix{}, 1), std::invalid_argument);
}

TEST_CASE("random connected subgraph") {
  auto g = erdos_renyi(200, 0.03, 6);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    auto q = random_connected_subgraph(g, 12, rng);
    CHECK(q.is_connected());
    CHECK(q.edge_count() <= 12);
  }
}
