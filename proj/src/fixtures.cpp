#include "canned/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "canned/rng.hpp"

namespace canned {

namespace {

using Edges = std::vector<std::pair<VertexId, VertexId>>;

struct Builder {
  std::size_t n = 0;
  Edges edges;
  VertexId fresh() { return static_cast<VertexId>(n++); }
  void add(VertexId a, VertexId b) { edges.emplace_back(a, b); }
  Graph build() { return Graph::from_edges(n, std::move(edges)); }
};

// Pendant decorations that land in the truss-oblivious region.
void decorate(Builder& b, std::size_t base, std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> anchor(0, base - 1);
  std::uniform_int_distribution<int> kind(0, 3), len(1, 6), leaves(5, 9), cyc(5, 8);
  for (std::size_t i = 0; i < count; ++i) {
    const VertexId a = static_cast<VertexId>(anchor(rng));
    switch (kind(rng)) {
      case 0: {  // chain
        VertexId cur = a;
        for (int k = len(rng); k > 0; --k) {
          VertexId x = b.fresh();
          b.add(cur, x);
          cur = x;
        }
        break;
      }
      case 1: {  // star hanging off an edge
        VertexId c = b.fresh();
        b.add(a, c);
        for (int k = leaves(rng); k > 0; --k) b.add(c, b.fresh());
        break;
      }
      case 2: {  // two adjacent stars
        VertexId c1 = b.fresh(), c2 = b.fresh();
        b.add(a, c1);
        b.add(c1, c2);
        for (int k = leaves(rng); k > 0; --k) b.add(c1, b.fresh());
        for (int k = leaves(rng); k > 0; --k) b.add(c2, b.fresh());
        break;
      }
      default: {  // detached cycle on a stalk
        VertexId first = b.fresh(), cur = first;
        b.add(a, first);
        for (int k = cyc(rng) - 1; k > 0; --k) {
          VertexId x = b.fresh();
          b.add(cur, x);
          cur = x;
        }
        b.add(cur, first);
        break;
      }
    }
  }
}

}  // namespace

Graph social_fixture(std::uint64_t seed, std::size_t n) {
  auto rng = substream(seed, "fixture/social");
  Builder b;
  const std::size_t m = 3;
  std::vector<VertexId> ends;  // endpoint multiset for preferential attachment
  std::vector<std::set<VertexId>> adj;
  for (std::size_t i = 0; i <= m; ++i) b.fresh();
  adj.resize(m + 1);
  for (VertexId i = 0; i <= m; ++i)
    for (VertexId j = i + 1; j <= m; ++j) {
      b.add(i, j);
      adj[i].insert(j);
      adj[j].insert(i);
      ends.push_back(i);
      ends.push_back(j);
    }
  std::bernoulli_distribution triad(0.6);
  while (b.n < n) {
    const VertexId v = b.fresh();
    adj.emplace_back();
    std::set<VertexId> picked;
    VertexId last = 0;
    bool have_last = false;
    while (picked.size() < m) {
      VertexId t;
      if (have_last && triad(rng) && !adj[last].empty()) {
        std::vector<VertexId> nb(adj[last].begin(), adj[last].end());
        t = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
      } else {
        t = ends[std::uniform_int_distribution<std::size_t>(0, ends.size() - 1)(rng)];
      }
      if (t == v || picked.count(t)) continue;
      picked.insert(t);
      last = t;
      have_last = true;
    }
    for (VertexId t : picked) {
      b.add(v, t);
      adj[v].insert(t);
      adj[t].insert(v);
      ends.push_back(v);
      ends.push_back(t);
    }
  }
  decorate(b, n, n / 4, rng);
  return b.build();
}

Graph road_fixture(std::uint64_t seed, std::size_t side) {
  auto rng = substream(seed, "fixture/road");
  Builder b;
  b.n = side * side;
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * side + c); };
  std::bernoulli_distribution drop(0.25), diag(0.06);
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t c = 0; c < side; ++c) {
      if (c + 1 < side && !drop(rng)) b.add(id(r, c), id(r, c + 1));
      if (r + 1 < side && !drop(rng)) b.add(id(r, c), id(r + 1, c));
      if (r + 1 < side && c + 1 < side && diag(rng)) b.add(id(r, c), id(r + 1, c + 1));
    }
  decorate(b, side * side, side * side / 20, rng);
  return b.build();
}

Graph collab_fixture(std::uint64_t seed, std::size_t n, std::size_t groups) {
  auto rng = substream(seed, "fixture/collab");
  Builder b;
  b.n = n;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::geometric_distribution<int> extra(0.45);
  for (std::size_t g = 0; g < groups; ++g) {
    const std::size_t k = std::min<std::size_t>(2 + extra(rng), 9);
    // Members cluster around a random seat so cliques overlap.
    const std::size_t seat = pick(rng);
    std::set<VertexId> members;
    std::uniform_int_distribution<int> off(-25, 25);
    while (members.size() < k)
      members.insert(static_cast<VertexId>((static_cast<long>(seat + n) + off(rng)) % static_cast<long>(n)));
    std::vector<VertexId> mv(members.begin(), members.end());
    for (std::size_t i = 0; i < mv.size(); ++i)
      for (std::size_t j = i + 1; j < mv.size(); ++j) b.add(mv[i], mv[j]);
  }
  decorate(b, n, n / 10, rng);
  return b.build();
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  auto rng = substream(seed, "fixture/er");
  std::bernoulli_distribution coin(p);
  Edges e;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph::from_edges(n, std::move(e));
}

std::vector<NamedFixture> standard_fixtures(std::uint64_t seed) {
  std::vector<NamedFixture> out;
  out.push_back({"social", social_fixture(seed)});
  out.push_back({"road", road_fixture(seed)});
  out.push_back({"collab", collab_fixture(seed)});
  return out;
}

LoadedGraph as_loaded(Graph g) {
  LoadedGraph lg;
  lg.original_id.resize(g.vertex_count());
  std::iota(lg.original_id.begin(), lg.original_id.end(), 0);
  lg.graph = std::move(g);
  return lg;
}

}  // namespace canned
