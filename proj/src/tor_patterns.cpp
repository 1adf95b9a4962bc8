#include "canned/tor_patterns.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "canned/isomorphism.hpp"

namespace canned {

std::vector<int> canonical_centers(std::vector<int> d) {
  std::vector<int> r(d.rbegin(), d.rend());
  return std::min(d, r);
}

namespace {

// BFS over chains of centers starting at s. A chain is counted from the end
// with the smaller vertex id so each undirected chain is seen once.
void grow_from(const Graph& g, VertexId s, int epsilon, int eta_max, StarCensus& out) {
  auto deg = [&](VertexId v) { return static_cast<int>(g.degree(v)); };
  if (deg(s) < epsilon || deg(s) > eta_max) return;
  std::deque<std::pair<std::vector<VertexId>, int>> q;  // chain, edge count
  q.push_back({{s}, deg(s)});
  while (!q.empty()) {
    auto [chain, size] = std::move(q.front());
    q.pop_front();
    const VertexId last = chain.back();
    for (VertexId z : g.neighbors(last)) {
      if (deg(z) < epsilon) continue;
      if (std::find(chain.begin(), chain.end(), z) != chain.end()) continue;
      const int merged = size + deg(z) - 1;
      if (merged > eta_max) continue;
      auto next = chain;
      next.push_back(z);
      if (next.front() < next.back()) {
        std::vector<int> d;
        for (VertexId c : next) d.push_back(deg(c));
        ++out.asterisms[canonical_centers(std::move(d))];
      }
      q.push_back({std::move(next), merged});
    }
  }
}

void merge_into(StarCensus& dst, const StarCensus& src) {
  for (const auto& [k, f] : src.stars) dst.stars[k] += f;
  for (const auto& [k, f] : src.asterisms) dst.asterisms[k] += f;
}

}  // namespace

StarCensus star_census_serial(const Graph& g, int epsilon, int eta_max) {
  StarCensus out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<int>(g.degree(v)) >= epsilon) ++out.stars[static_cast<int>(g.degree(v))];
    grow_from(g, v, epsilon, eta_max, out);
  }
  return out;
}

StarCensus star_census(const Graph& g, int epsilon, int eta_max) {
  StarCensus total;
  const std::int64_t n = static_cast<std::int64_t>(g.vertex_count());
#pragma omp parallel
  {
    StarCensus local;
#pragma omp for schedule(dynamic, 512) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      VertexId v = static_cast<VertexId>(i);
      if (static_cast<int>(g.degree(v)) >= epsilon) ++local.stars[static_cast<int>(g.degree(v))];
      grow_from(g, v, epsilon, eta_max, local);
    }
#pragma omp critical
    merge_into(total, local);
  }
  return total;
}

StarPatterns gen_star_patterns(const Graph& g_o, int epsilon, int eta_max) {
  if (epsilon < 1) throw std::invalid_argument("epsilon must be >= 1");
  StarCensus c = star_census(g_o, epsilon, eta_max);
  StarPatterns out;
  for (const auto& [k, f] : c.stars) {
    // Stars beyond eta_max are kept by frequency only; selection prunes them.
    Pattern p = k > eta_max ? nominal_pattern(PatternClass::Star, k, k) : star_pattern(k);
    p.freq = f;
    out.stars.push_back(std::move(p));
  }
  for (const auto& [d, f] : c.asterisms) {
    Pattern p = asterism_pattern(d);
    p.freq = f;
    out.asterisms.push_back(std::move(p));
  }
  return out;
}

Graph remove_star_edges(const Graph& g_o, int epsilon) {
  std::vector<bool> keep(g_o.edge_count());
  for (EdgeIndex e = 0; e < g_o.edge_count(); ++e) {
    const auto& uv = g_o.edge(e);
    keep[e] = static_cast<int>(g_o.degree(uv.u)) < epsilon &&
              static_cast<int>(g_o.degree(uv.v)) < epsilon;
  }
  return g_o.edge_subgraph(keep);
}

ComponentShape classify_component(std::size_t n, std::size_t deg1, std::size_t deg2) {
  if (deg1 == 2 && deg2 + 2 == n && n != 2 && n != 3) return ComponentShape::Path;
  if (deg2 == n && n != 3 && n != 4) return ComponentShape::Cycle;
  return ComponentShape::Other;
}

std::vector<Pattern> gen_small_patterns(const Graph& g_r, int eta_min, int eta_max) {
  std::uint32_t count = 0;
  auto comp = g_r.components(&count);
  std::vector<std::vector<VertexId>> members(count);
  for (VertexId v = 0; v < g_r.vertex_count(); ++v) members[comp[v]].push_back(v);

  struct Census {
    ComponentShape shape = ComponentShape::Other;
    std::size_t vertices = 0, edges = 0;
    bool keep_unique = false;
    SmallGraph graph;
  };
  std::vector<Census> census(count);
  const std::int64_t nc = count;
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t c = 0; c < nc; ++c) {
    const auto& vs = members[c];
    Census& cs = census[c];
    std::size_t d1 = 0, d2 = 0, deg_sum = 0;
    for (VertexId v : vs) {
      d1 += g_r.degree(v) == 1;
      d2 += g_r.degree(v) == 2;
      deg_sum += g_r.degree(v);
    }
    cs.vertices = vs.size();
    cs.edges = deg_sum / 2;
    cs.shape = classify_component(vs.size(), d1, d2);
    if (cs.edges == 0) continue;
    if (cs.shape == ComponentShape::Other) {
      // 4-cycles are default patterns; everything else in range is unique.
      const bool is_square = cs.vertices == 4 && d2 == 4;
      cs.keep_unique = !is_square && static_cast<int>(cs.edges) >= eta_min &&
                       static_cast<int>(cs.edges) <= eta_max;
      if (cs.keep_unique) {
        std::vector<std::pair<VertexId, VertexId>> e;
        auto local = [&](VertexId x) {
          return static_cast<VertexId>(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin());
        };
        for (VertexId v : vs)
          for (VertexId w : g_r.neighbors(v))
            if (v < w) e.emplace_back(local(v), local(w));
        cs.graph = Graph::from_edges(vs.size(), std::move(e));
      }
    }
  }

  std::map<int, std::uint64_t> paths, cycles;
  // Serial dedup in component order keeps unique ids reproducible.
  std::vector<Pattern> uniques;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> bucket;
  std::map<int, int> serial_per_size;
  for (auto& cs : census) {
    if (cs.edges == 0) continue;
    if (cs.shape == ComponentShape::Path) ++paths[static_cast<int>(cs.edges)];
    else if (cs.shape == ComponentShape::Cycle) ++cycles[static_cast<int>(cs.vertices)];
    else if (cs.keep_unique) {
      std::uint64_t h = invariant_hash(cs.graph);
      auto& b = bucket[h];
      bool found = false;
      for (std::size_t idx : b) {
        if (are_isomorphic(uniques[idx].graph, cs.graph)) {
          ++uniques[idx].freq;
          found = true;
          break;
        }
      }
      if (!found) {
        int serial = serial_per_size[static_cast<int>(cs.edges)]++;
        Pattern p = unique_pattern(std::move(cs.graph), serial);
        p.freq = 1;
        b.push_back(uniques.size());
        uniques.push_back(std::move(p));
      }
    }
  }

  std::vector<Pattern> out;
  for (const auto& [k, f] : paths) {
    Pattern p = k > eta_max ? nominal_pattern(PatternClass::Path, k, k) : path_pattern(k);
    p.freq = f;
    out.push_back(std::move(p));
  }
  for (const auto& [k, f] : cycles) {
    Pattern p = k > eta_max ? nominal_pattern(PatternClass::Cycle, k, k) : cycle_pattern(k);
    p.freq = f;
    out.push_back(std::move(p));
  }
  for (auto& p : uniques) out.push_back(std::move(p));
  return out;
}

}  // namespace canned
