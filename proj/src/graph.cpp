#include "canned/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace canned {

ParseError::ParseError(const std::string& path, std::size_t line, const std::string& what)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}

Graph Graph::from_edges(std::size_t n, std::vector<std::pair<VertexId, VertexId>> raw) {
  Graph g;
  g.edges_.reserve(raw.size());
  for (auto [a, b] : raw) {
    if (a == b) continue;
    if (a >= n || b >= n) throw std::out_of_range("edge endpoint exceeds vertex count");
    g.edges_.emplace_back(a, b);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.offsets_.assign(n + 1, 0);
  for (const auto& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adj_.resize(2 * g.edges_.size());
  g.adj_edge_.resize(2 * g.edges_.size());
  // Sorted edge order: for vertex x, all (w,x) with w<x precede all (x,w),
  // so a single pass leaves every neighbor list sorted.
  std::vector<std::size_t> pos(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeIndex i = 0; i < g.edges_.size(); ++i) {
    const auto& e = g.edges_[i];
    g.adj_[pos[e.u]] = e.v;
    g.adj_edge_[pos[e.u]++] = i;
    g.adj_[pos[e.v]] = e.u;
    g.adj_edge_[pos[e.v]++] = i;
  }
  return g;
}

EdgeIndex Graph::edge_index(VertexId a, VertexId b) const {
  if (a >= vertex_count() || b >= vertex_count() || a == b) return kNoEdge;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbors(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return kNoEdge;
  return adj_edge_[offsets_[a] + static_cast<std::size_t>(it - nb.begin())];
}

std::vector<std::uint32_t> Graph::components(std::uint32_t* count) const {
  const std::size_t n = vertex_count();
  std::vector<std::uint32_t> comp(n, ~0u);
  std::uint32_t next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != ~0u) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : neighbors(x)) {
        if (comp[y] == ~0u) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

bool Graph::is_connected() const {
  if (vertex_count() <= 1) return true;
  std::uint32_t c = 0;
  components(&c);
  return c == 1;
}

Graph Graph::edge_subgraph(const std::vector<bool>& keep) const {
  std::vector<std::pair<VertexId, VertexId>> kept;
  for (EdgeIndex i = 0; i < edges_.size(); ++i)
    if (keep[i]) kept.emplace_back(edges_[i].u, edges_[i].v);
  return from_edges(vertex_count(), std::move(kept));
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == ','; }

}  // namespace

LoadedGraph parse_edge_list(const std::string& text, const std::string& source) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::size_t line_no = 0;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    ++line_no;
    std::size_t end = text.find('\n', i);
    if (end == std::string::npos) end = n;
    const char* p = text.data() + i;
    const char* e = text.data() + end;
    while (p < e && is_space(*p)) ++p;
    if (p < e && *p != '#' && *p != '%') {
      std::int64_t ids[2];
      for (int k = 0; k < 2; ++k) {
        while (p < e && is_space(*p)) ++p;
        auto [q, ec] = std::from_chars(p, e, ids[k]);
        if (ec != std::errc() || (q < e && !is_space(*q)))
          throw ParseError(source, line_no, "expected two integer vertex ids");
        p = q;
      }
      // Self-loops are dropped before id collection so they add no vertex.
      if (ids[0] != ids[1]) raw.emplace_back(ids[0], ids[1]);
    }
    i = end + 1;
  }

  LoadedGraph lg;
  lg.original_id.reserve(raw.size() * 2);
  for (auto [a, b] : raw) {
    lg.original_id.push_back(a);
    lg.original_id.push_back(b);
  }
  std::sort(lg.original_id.begin(), lg.original_id.end());
  lg.original_id.erase(std::unique(lg.original_id.begin(), lg.original_id.end()),
                       lg.original_id.end());
  auto dense = [&](std::int64_t x) {
    return static_cast<VertexId>(
        std::lower_bound(lg.original_id.begin(), lg.original_id.end(), x) - lg.original_id.begin());
  };
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(raw.size());
  for (auto [a, b] : raw) edges.emplace_back(dense(a), dense(b));
  lg.graph = Graph::from_edges(lg.original_id.size(), std::move(edges));
  return lg;
}

LoadedGraph load_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str(), path);
}

void write_edge_list(const std::string& path, const LoadedGraph& lg) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "# vertices " << lg.graph.vertex_count() << " edges " << lg.graph.edge_count() << "\n";
  for (const auto& e : lg.graph.edges())
    out << lg.original_id[e.u] << ' ' << lg.original_id[e.v] << '\n';
}

void write_remap_table(const std::string& path, const LoadedGraph& lg) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (std::size_t i = 0; i < lg.original_id.size(); ++i) out << i << ' ' << lg.original_id[i] << '\n';
}

std::size_t support(const Graph& g, VertexId a, VertexId b) {
  if (!g.has_edge(a, b)) throw std::invalid_argument("support: edge not in graph");
  auto na = g.neighbors(a);
  auto nb = g.neighbors(b);
  std::size_t c = 0;
  auto i = na.begin();
  auto j = nb.begin();
  while (i != na.end() && j != nb.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else { ++c; ++i; ++j; }
  }
  return c;
}

std::size_t support(const Graph& g, const EdgeId& e) { return support(g, e.u, e.v); }

namespace {

std::uint32_t edge_common(const Graph& g, const EdgeId& e) {
  auto na = g.neighbors(e.u);
  auto nb = g.neighbors(e.v);
  std::uint32_t c = 0;
  auto i = na.begin();
  auto j = nb.begin();
  while (i != na.end() && j != nb.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else { ++c; ++i; ++j; }
  }
  return c;
}

}  // namespace

std::vector<std::uint32_t> edge_supports_serial(const Graph& g) {
  std::vector<std::uint32_t> s(g.edge_count());
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) s[i] = edge_common(g, g.edge(i));
  return s;
}

std::vector<std::uint32_t> edge_supports(const Graph& g) {
  std::vector<std::uint32_t> s(g.edge_count());
  const std::int64_t m = static_cast<std::int64_t>(g.edge_count());
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t i = 0; i < m; ++i) s[i] = edge_common(g, g.edge(static_cast<EdgeIndex>(i)));
  return s;
}

SmallGraph make_path(std::size_t edges) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < edges; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(edges + 1, std::move(e));
}

SmallGraph make_cycle(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < n; ++i) e.emplace_back(i, static_cast<VertexId>((i + 1) % n));
  return Graph::from_edges(n, std::move(e));
}

SmallGraph make_star(std::size_t leaves) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, std::move(e));
}

SmallGraph make_clique(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, std::move(e));
}

SmallGraph make_graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  return Graph::from_edges(n, std::vector<std::pair<VertexId, VertexId>>(edges));
}

}  // namespace canned
