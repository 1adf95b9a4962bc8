#include "canned/truss.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace canned {

std::vector<std::uint32_t> peel_trussness(const Graph& g, bool parallel_support) {
  const std::size_t m = g.edge_count();
  std::vector<std::uint32_t> sup = parallel_support ? edge_supports(g) : edge_supports_serial(g);
  std::vector<std::uint32_t> truss(m, 2);
  if (m == 0) return truss;

  // Bin sort by support; stable so equal supports stay in EdgeId order.
  std::uint32_t max_sup = *std::max_element(sup.begin(), sup.end());
  std::vector<std::size_t> bin(max_sup + 2, 0);
  for (auto s : sup) ++bin[s + 1];
  for (std::size_t s = 1; s < bin.size(); ++s) bin[s] += bin[s - 1];
  std::vector<EdgeIndex> sorted(m);
  std::vector<std::size_t> pos(m);
  {
    std::vector<std::size_t> fill(bin.begin(), bin.end() - 1);
    for (EdgeIndex e = 0; e < m; ++e) {
      pos[e] = fill[sup[e]]++;
      sorted[pos[e]] = e;
    }
  }
  // bin[s] = first slot of bucket s.
  std::vector<bool> removed(m, false);

  auto decrement = [&](EdgeIndex f) {
    std::uint32_t s = sup[f];
    std::size_t first = bin[s];
    EdgeIndex other = sorted[first];
    if (other != f) {
      std::swap(sorted[first], sorted[pos[f]]);
      pos[other] = pos[f];
      pos[f] = first;
    }
    ++bin[s];
    --sup[f];
  };

  for (std::size_t i = 0; i < m; ++i) {
    EdgeIndex e = sorted[i];
    std::uint32_t s = sup[e];
    truss[e] = s + 2;
    const EdgeId& uv = g.edge(e);
    auto nu = g.neighbors(uv.u);
    auto eu = g.incident(uv.u);
    auto nv = g.neighbors(uv.v);
    auto ev = g.incident(uv.v);
    std::size_t a = 0, b = 0;
    while (a < nu.size() && b < nv.size()) {
      if (nu[a] < nv[b]) ++a;
      else if (nv[b] < nu[a]) ++b;
      else {
        EdgeIndex f1 = eu[a], f2 = ev[b];
        if (!removed[f1] && !removed[f2]) {
          if (sup[f1] > s) decrement(f1);
          if (sup[f2] > s) decrement(f2);
        }
        ++a;
        ++b;
      }
    }
    removed[e] = true;
    // Slot i is consumed; keep bin starts from pointing at it.
    if (bin[s] <= i) bin[s] = i + 1;
  }
  return truss;
}

DecompositionResult decompose(const Graph& g, int eta_max, bool parallel_support) {
  if (eta_max < 3) throw std::invalid_argument("eta_max must be >= 3");
  DecompositionResult r;
  r.eta_max = eta_max;
  auto truss = peel_trussness(g, parallel_support);
  std::vector<bool> in_t(g.edge_count()), in_o(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    in_t[e] = truss[e] >= 3;
    in_o[e] = !in_t[e];
  }
  r.g_t = g.edge_subgraph(in_t);
  r.g_o = g.edge_subgraph(in_o);
  // g_t edge indices follow the same canonical order as the kept edges of g.
  r.t_of_gt.reserve(r.g_t.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (in_t[e])
      r.t_of_gt.push_back(static_cast<std::uint8_t>(std::min<std::uint32_t>(truss[e], eta_max)));
  return r;
}

int DecompositionResult::trussness(VertexId a, VertexId b) const {
  EdgeIndex e = g_t.edge_index(a, b);
  if (e != kNoEdge) return t_of_gt[e];
  if (g_o.has_edge(a, b)) return 2;
  throw std::invalid_argument("trussness: edge not in graph");
}

double tir_fraction(const DecompositionResult& r) {
  if (r.total_edges() == 0) throw std::domain_error("tir_fraction of an empty graph");
  return static_cast<double>(r.g_t.edge_count()) / static_cast<double>(r.total_edges());
}

void write_trussness_dump(const std::string& path, const DecompositionResult& r,
                          const std::vector<std::int64_t>* original_id) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  auto id = [&](VertexId v) -> std::int64_t { return original_id ? (*original_id)[v] : v; };
  out << "# u v trussness (eta_max " << r.eta_max << ")\n";
  // Merge both regions back into canonical order.
  const auto& et = r.g_t.edges();
  const auto& eo = r.g_o.edges();
  std::size_t i = 0, j = 0;
  while (i < et.size() || j < eo.size()) {
    if (j == eo.size() || (i < et.size() && et[i] < eo[j])) {
      out << id(et[i].u) << ' ' << id(et[i].v) << ' ' << int(r.t_of_gt[i]) << '\n';
      ++i;
    } else {
      out << id(eo[j].u) << ' ' << id(eo[j].v) << " 2\n";
      ++j;
    }
  }
}

LoadedDecomposition load_trussness_dump(const std::string& path, int eta_max) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream edges_text;
  std::vector<std::tuple<std::int64_t, std::int64_t, int>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::int64_t a, b;
    int t;
    if (!(ls >> a >> b >> t) || t < 2) throw ParseError(path, line_no, "expected 'u v trussness'");
    rows.emplace_back(a, b, t);
    edges_text << a << ' ' << b << '\n';
  }
  LoadedDecomposition out;
  out.graph = parse_edge_list(edges_text.str(), path);
  const Graph& g = out.graph.graph;
  const auto& ids = out.graph.original_id;
  auto dense = [&](std::int64_t x) {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
  };
  std::vector<int> t(g.edge_count(), 2);
  for (auto [a, b, k] : rows) {
    EdgeIndex e = g.edge_index(dense(a), dense(b));
    if (e != kNoEdge) t[e] = k;
  }
  auto& r = out.result;
  r.eta_max = eta_max;
  std::vector<bool> in_t(g.edge_count()), in_o(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    in_t[e] = t[e] >= 3;
    in_o[e] = !in_t[e];
  }
  r.g_t = g.edge_subgraph(in_t);
  r.g_o = g.edge_subgraph(in_o);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (in_t[e]) r.t_of_gt.push_back(static_cast<std::uint8_t>(std::min(t[e], eta_max)));
  return out;
}

}  // namespace canned
