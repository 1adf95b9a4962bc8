#include "canned/queries.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "canned/rng.hpp"

namespace canned {

const char* tag_name(QueryTag t) {
  switch (t) {
    case QueryTag::Random: return "random";
    case QueryTag::Path: return "path";
    case QueryTag::Tree: return "tree";
    case QueryTag::Star: return "star";
    case QueryTag::Cycle: return "cycle";
    case QueryTag::Flower: return "flower";
  }
  return "?";
}

QueryTag parse_tag(const std::string& s) {
  for (QueryTag t : {QueryTag::Random, QueryTag::Path, QueryTag::Tree, QueryTag::Star, QueryTag::Cycle,
                     QueryTag::Flower})
    if (s == tag_name(t)) return t;
  throw std::invalid_argument("unknown query tag '" + s + "'");
}

int QueryMix::count(QueryTag t) const {
  switch (t) {
    case QueryTag::Random: return random;
    case QueryTag::Path: return path;
    case QueryTag::Tree: return tree;
    case QueryTag::Star: return star;
    case QueryTag::Cycle: return cycle;
    case QueryTag::Flower: return flower;
  }
  return 0;
}

namespace {

using Rng = std::mt19937_64;

// Edge set under construction, in target vertex ids.
struct Sample {
  std::set<EdgeId> edges;
  std::unordered_set<VertexId> vertices;

  bool add(VertexId a, VertexId b) {
    if (!edges.insert(EdgeId(a, b)).second) return false;
    vertices.insert(a);
    vertices.insert(b);
    return true;
  }
  bool has(VertexId v) const { return vertices.count(v) != 0; }
  std::size_t size() const { return edges.size(); }
};

template <class T>
const T& choose(const std::vector<T>& v, Rng& rng) {
  std::uniform_int_distribution<std::size_t> u(0, v.size() - 1);
  return v[u(rng)];
}

std::optional<VertexId> unused_neighbor(const Graph& g, VertexId v, const Sample& s, Rng& rng) {
  std::vector<VertexId> c;
  for (VertexId w : g.neighbors(v))
    if (!s.has(w)) c.push_back(w);
  if (c.empty()) return std::nullopt;
  return choose(c, rng);
}

void random_growth(const Graph& g, VertexId start, std::size_t target, Sample& s, Rng& rng) {
  std::vector<EdgeId> frontier;
  auto push = [&](VertexId v) {
    for (VertexId w : g.neighbors(v)) frontier.emplace_back(v, w);
  };
  s.vertices.insert(start);
  push(start);
  while (s.size() < target && !frontier.empty()) {
    std::uniform_int_distribution<std::size_t> u(0, frontier.size() - 1);
    const std::size_t i = u(rng);
    const EdgeId e = frontier[i];
    frontier[i] = frontier.back();
    frontier.pop_back();
    const bool new_u = !s.has(e.u), new_v = !s.has(e.v);
    if (!s.add(e.u, e.v)) continue;
    if (new_u) push(e.u);
    if (new_v) push(e.v);
  }
}

void walk(const Graph& g, VertexId start, std::size_t steps, Sample& s, Rng& rng) {
  VertexId cur = start;
  s.vertices.insert(start);
  for (std::size_t i = 0; i < steps; ++i) {
    auto nxt = unused_neighbor(g, cur, s, rng);
    if (!nxt) return;
    s.add(cur, *nxt);
    cur = *nxt;
  }
}

void bfs_tree(const Graph& g, VertexId root, std::size_t target, Sample& s, Rng& rng) {
  std::deque<VertexId> q{root};
  s.vertices.insert(root);
  while (!q.empty() && s.size() < target) {
    VertexId v = q.front();
    q.pop_front();
    std::vector<VertexId> nb(g.neighbors(v).begin(), g.neighbors(v).end());
    std::shuffle(nb.begin(), nb.end(), rng);
    for (VertexId w : nb) {
      if (s.size() >= target) break;
      if (s.has(w)) continue;
      s.add(v, w);
      q.push_back(w);
    }
  }
}

// Shortest a->b path avoiding `blocked` vertices and the direct edge (a,b).
std::optional<std::vector<VertexId>> detour(const Graph& g, VertexId a, VertexId b, const Sample& blocked,
                                           std::size_t max_len) {
  std::unordered_map<VertexId, VertexId> parent{{a, a}};
  std::deque<std::pair<VertexId, std::size_t>> q{{a, 0}};
  while (!q.empty()) {
    auto [v, d] = q.front();
    q.pop_front();
    if (d >= max_len) continue;
    for (VertexId w : g.neighbors(v)) {
      if (v == a && w == b) continue;
      if (parent.count(w)) continue;
      if (w != b && blocked.has(w)) continue;
      parent[w] = v;
      if (w == b) {
        std::vector<VertexId> path{b};
        while (path.back() != a) path.push_back(parent[path.back()]);
        return path;
      }
      q.push_back({w, d + 1});
    }
  }
  return std::nullopt;
}

void add_tails(const Graph& g, std::vector<VertexId> anchors, std::size_t target, Sample& s, Rng& rng) {
  for (int tries = 0; s.size() < target && tries < 64 && !anchors.empty(); ++tries) {
    const VertexId v = choose(anchors, rng);
    auto w = unused_neighbor(g, v, s, rng);
    if (!w) continue;
    s.add(v, *w);
    anchors.push_back(*w);
  }
}

std::optional<Sample> sample_one(const Graph& g, QueryTag tag, std::size_t target, const std::vector<VertexId>& pool,
                                 const std::vector<VertexId>& hubs, Rng& rng, std::size_t max_edges) {
  Sample s;
  switch (tag) {
    case QueryTag::Random: random_growth(g, choose(pool, rng), target, s, rng); break;
    case QueryTag::Path: walk(g, choose(pool, rng), target, s, rng); break;
    case QueryTag::Tree: bfs_tree(g, choose(pool, rng), target, s, rng); break;
    case QueryTag::Star: {
      if (hubs.empty()) return std::nullopt;
      const VertexId c = choose(hubs, rng);
      std::vector<VertexId> nb(g.neighbors(c).begin(), g.neighbors(c).end());
      std::shuffle(nb.begin(), nb.end(), rng);
      s.vertices.insert(c);
      for (VertexId w : nb) {
        if (s.size() >= target) break;
        s.add(c, w);
      }
      // A few pendant extensions keep it star-like when the hub is small.
      std::vector<VertexId> leaves(nb.begin(), nb.begin() + std::min(nb.size(), s.size()));
      const std::size_t cap = std::min(target, 2 * s.size());
      add_tails(g, leaves, cap, s, rng);
      break;
    }
    case QueryTag::Cycle: {
      const VertexId a = choose(pool, rng);
      std::vector<VertexId> nb(g.neighbors(a).begin(), g.neighbors(a).end());
      if (nb.empty()) return std::nullopt;
      const VertexId b = choose(nb, rng);
      Sample none;
      auto p = detour(g, a, b, none, max_edges - 1);
      if (!p) return std::nullopt;
      for (std::size_t i = 0; i + 1 < p->size(); ++i) s.add((*p)[i], (*p)[i + 1]);
      s.add(a, b);
      add_tails(g, *p, std::max(target, s.size()), s, rng);
      break;
    }
    case QueryTag::Flower: {
      if (hubs.empty()) return std::nullopt;
      const VertexId x = choose(hubs, rng);
      s.vertices.insert(x);
      std::vector<VertexId> nb(g.neighbors(x).begin(), g.neighbors(x).end());
      std::shuffle(nb.begin(), nb.end(), rng);
      int petals = 0;
      for (std::size_t i = 0; i < nb.size() && petals < 3 && s.size() < target; ++i) {
        if (s.has(nb[i])) continue;
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (s.has(nb[j])) continue;
          Sample blocked = s;
          auto p = detour(g, nb[i], nb[j], blocked, 6);
          if (!p || std::find(p->begin(), p->end(), x) != p->end()) continue;
          if (s.size() + p->size() + 1 > max_edges) continue;
          s.add(x, nb[i]);
          s.add(x, nb[j]);
          for (std::size_t k = 0; k + 1 < p->size(); ++k) s.add((*p)[k], (*p)[k + 1]);
          ++petals;
          break;
        }
      }
      if (petals == 0) return std::nullopt;
      // Stamen: a short chain from the hub.
      if (auto y = unused_neighbor(g, x, s, rng); y && s.size() < target) {
        s.add(x, *y);
        VertexId cur = *y;
        for (int k = 0; k < 2 && s.size() < target; ++k) {
          auto z = unused_neighbor(g, cur, s, rng);
          if (!z) break;
          s.add(cur, *z);
          cur = *z;
        }
      }
      // Stem: a small branching tree from the hub.
      if (auto y = unused_neighbor(g, x, s, rng); y && s.size() + 3 <= target) {
        s.add(x, *y);
        for (int k = 0; k < 2; ++k)
          if (auto z = unused_neighbor(g, *y, s, rng)) s.add(*y, *z);
      }
      break;
    }
  }
  return s;
}

SmallGraph to_small(const Sample& s) {
  std::vector<VertexId> vs(s.vertices.begin(), s.vertices.end());
  std::sort(vs.begin(), vs.end());
  auto local = [&](VertexId v) { return static_cast<VertexId>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
  std::vector<std::pair<VertexId, VertexId>> e;
  for (const auto& x : s.edges) e.emplace_back(local(x.u), local(x.v));
  return Graph::from_edges(vs.size(), std::move(e));
}

}  // namespace

SmallGraph random_connected_subgraph(const Graph& g, std::size_t edges, std::mt19937_64& rng) {
  std::vector<VertexId> pool;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) pool.push_back(v);
  if (pool.empty()) throw std::invalid_argument("graph has no edges");
  Sample s;
  random_growth(g, choose(pool, rng), edges, s, rng);
  return to_small(s);
}

std::vector<Query> generate_queries(const Graph& g, const QueryMix& mix, std::uint64_t seed,
                                    std::vector<std::string>* warnings) {
  if (g.edge_count() == 0) throw std::invalid_argument("query generation needs a non-empty graph");
  if (mix.min_edges < 1 || mix.max_edges < mix.min_edges) throw std::invalid_argument("bad query size range");
  std::vector<VertexId> pool, hubs;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) pool.push_back(v);
    if (g.degree(v) >= 4) hubs.push_back(v);
  }
  std::vector<Query> out;
  for (QueryTag tag : {QueryTag::Random, QueryTag::Path, QueryTag::Tree, QueryTag::Star, QueryTag::Cycle,
                       QueryTag::Flower}) {
    const int want = mix.count(tag);
    if (want <= 0) continue;
    Rng rng = substream(seed, std::string("queries/") + tag_name(tag));
    std::uniform_int_distribution<int> size(mix.min_edges, mix.max_edges);
    int made = 0, failures = 0;
    while (made < want) {
      const std::size_t target = static_cast<std::size_t>(size(rng));
      auto s = sample_one(g, tag, target, pool, hubs, rng, static_cast<std::size_t>(mix.max_edges));
      if (!s || s->size() < static_cast<std::size_t>(mix.min_edges) ||
          s->size() > static_cast<std::size_t>(mix.max_edges)) {
        if (++failures > 50 * want + 200) {
          if (warnings)
            warnings->push_back(std::string("tag ") + tag_name(tag) + " skipped after " + std::to_string(made) +
                                " of " + std::to_string(want) + " queries");
          break;
        }
        continue;
      }
      Query q;
      q.id = std::string(tag_name(tag)) + "-" + std::to_string(made);
      q.tag = tag;
      q.graph = to_small(*s);
      out.push_back(std::move(q));
      ++made;
    }
  }
  return out;
}

}  // namespace canned
