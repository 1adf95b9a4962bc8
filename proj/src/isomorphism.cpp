#include "canned/isomorphism.hpp"

#include <algorithm>

namespace canned {

namespace {

struct Matcher {
  const SmallGraph& p;
  const SmallGraph& t;
  const std::vector<bool>* forbidden;
  bool exact_degree;

  std::vector<VertexId> order;
  std::vector<std::int32_t> anchor;  // earlier-ordered neighbor, or -1
  Embedding map;
  std::vector<bool> used;

  Matcher(const SmallGraph& pat, const SmallGraph& tgt, const std::vector<bool>* forb, bool exact)
      : p(pat), t(tgt), forbidden(forb), exact_degree(exact) {
    const std::size_t n = p.vertex_count();
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    anchor.assign(n, -1);
    // Greedy connectivity-first order: most links to placed vertices, then
    // highest degree, then smallest id.
    for (std::size_t step = 0; step < n; ++step) {
      std::int64_t best = -1;
      for (VertexId v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0 || links[v] > links[best] ||
            (links[v] == links[best] && p.degree(v) > p.degree(best)))
          best = v;
      }
      VertexId b = static_cast<VertexId>(best);
      placed[b] = true;
      order.push_back(b);
      for (VertexId w : p.neighbors(b)) {
        if (!placed[w]) {
          ++links[w];
          if (anchor[w] < 0) anchor[w] = static_cast<std::int32_t>(b);
        }
      }
    }
    map.assign(n, 0);
    used.assign(t.vertex_count(), false);
  }

  bool edge_ok(VertexId a, VertexId b) const {
    EdgeIndex e = t.edge_index(a, b);
    if (e == kNoEdge) return false;
    return !forbidden || !(*forbidden)[e];
  }

  bool feasible(VertexId pv, VertexId tv, std::size_t depth) const {
    if (used[tv]) return false;
    if (exact_degree ? t.degree(tv) != p.degree(pv) : t.degree(tv) < p.degree(pv)) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      VertexId q = order[i];
      if (p.has_edge(pv, q) && !edge_ok(tv, map[q])) return false;
    }
    return true;
  }

  template <class Visit>
  bool run(std::size_t depth, Visit& visit) {
    if (depth == order.size()) return visit(map);
    VertexId pv = order[depth];
    auto try_one = [&](VertexId tv) {
      if (!feasible(pv, tv, depth)) return true;
      map[pv] = tv;
      used[tv] = true;
      bool go = run(depth + 1, visit);
      used[tv] = false;
      return go;
    };
    if (anchor[pv] >= 0) {
      for (VertexId tv : t.neighbors(map[static_cast<VertexId>(anchor[pv])]))
        if (!try_one(tv)) return false;
    } else {
      for (VertexId tv = 0; tv < t.vertex_count(); ++tv)
        if (!try_one(tv)) return false;
    }
    return true;
  }
};

std::vector<std::size_t> degree_sequence(const SmallGraph& g) {
  std::vector<std::size_t> d(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

std::uint64_t invariant_hash(const SmallGraph& g) {
  std::vector<std::vector<std::size_t>> sig(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    sig[v].push_back(g.degree(v));
    std::vector<std::size_t> nd;
    for (VertexId w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    sig[v].insert(sig[v].end(), nd.begin(), nd.end());
  }
  std::sort(sig.begin(), sig.end());
  std::uint64_t h = mix(g.vertex_count(), g.edge_count());
  for (const auto& s : sig) {
    h = mix(h, s.size());
    for (auto x : s) h = mix(h, x);
  }
  return h;
}

bool are_isomorphic(const SmallGraph& a, const SmallGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  if (invariant_hash(a) != invariant_hash(b)) return false;
  Matcher m(a, b, nullptr, true);
  bool found = false;
  auto visit = [&](const Embedding&) {
    found = true;
    return false;
  };
  m.run(0, visit);
  return found;
}

std::size_t enumerate_embeddings(const SmallGraph& pattern, const SmallGraph& target,
                                 const std::function<bool(const Embedding&)>& visit,
                                 std::size_t limit, const std::vector<bool>* forbidden_edges) {
  if (pattern.vertex_count() > target.vertex_count() || pattern.edge_count() > target.edge_count())
    return 0;
  if (pattern.vertex_count() == 0) return 0;
  Matcher m(pattern, target, forbidden_edges, false);
  std::size_t count = 0;
  auto wrapped = [&](const Embedding& e) {
    ++count;
    if (!visit(e)) return false;
    return count < limit;
  };
  m.run(0, wrapped);
  return count;
}

std::optional<Embedding> find_embedding(const SmallGraph& pattern, const SmallGraph& target,
                                        const std::set<EdgeId>& forbidden) {
  std::vector<bool> forb(target.edge_count(), false);
  for (const auto& e : forbidden) {
    EdgeIndex i = target.edge_index(e.u, e.v);
    if (i != kNoEdge) forb[i] = true;
  }
  std::optional<Embedding> out;
  enumerate_embeddings(
      pattern, target,
      [&](const Embedding& e) {
        out = e;
        return false;
      },
      1, &forb);
  return out;
}

std::vector<EdgeIndex> embedded_edges(const SmallGraph& pattern, const SmallGraph& target,
                                      const Embedding& m) {
  std::vector<EdgeIndex> out;
  out.reserve(pattern.edge_count());
  for (const auto& e : pattern.edges()) out.push_back(target.edge_index(m[e.u], m[e.v]));
  return out;
}

}  // namespace canned
