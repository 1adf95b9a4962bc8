#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace canned {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint32_t;

inline constexpr EdgeIndex kNoEdge = ~EdgeIndex{0};

// Canonical unordered pair, u < v.
struct EdgeId {
  VertexId u = 0;
  VertexId v = 0;

  EdgeId() = default;
  EdgeId(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const EdgeId&, const EdgeId&) = default;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Immutable undirected simple graph in CSR form. Edge indices follow the
// sorted canonical edge order, so index order == canonical EdgeId order.
class Graph {
 public:
  Graph() = default;

  // Drops self-loops and duplicates; ids must be < n.
  static Graph from_edges(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t size() const { return edges_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  // Edge index of each adjacency slot, parallel to neighbors(v).
  std::span<const EdgeIndex> incident(VertexId v) const {
    return {adj_edge_.data() + offsets_[v], adj_edge_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  const std::vector<EdgeId>& edges() const { return edges_; }
  const EdgeId& edge(EdgeIndex i) const { return edges_[i]; }

  EdgeIndex edge_index(VertexId a, VertexId b) const;
  bool has_edge(VertexId a, VertexId b) const { return edge_index(a, b) != kNoEdge; }

  bool is_connected() const;
  // Component id per vertex, numbered by smallest member vertex.
  std::vector<std::uint32_t> components(std::uint32_t* count = nullptr) const;

  // Subgraph on the same vertex set keeping edges where keep[i] is true.
  Graph edge_subgraph(const std::vector<bool>& keep) const;

  std::vector<std::uint32_t> labels;  // optional, empty when unlabeled

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adj_;
  std::vector<EdgeIndex> adj_edge_;
  std::vector<EdgeId> edges_;
};

// Patterns and queries use the same representation.
using SmallGraph = Graph;

struct LoadedGraph {
  Graph graph;
  std::vector<std::int64_t> original_id;  // dense id -> id in the file
};

LoadedGraph load_edge_list(const std::string& path);
LoadedGraph parse_edge_list(const std::string& text, const std::string& source = "<memory>");

// SNAP-style export in original ids, plus "dense original" remap table.
void write_edge_list(const std::string& path, const LoadedGraph& lg);
void write_remap_table(const std::string& path, const LoadedGraph& lg);

std::size_t support(const Graph& g, VertexId a, VertexId b);
std::size_t support(const Graph& g, const EdgeId& e);

// Per-edge support, indexed by edge index.
std::vector<std::uint32_t> edge_supports_serial(const Graph& g);
std::vector<std::uint32_t> edge_supports(const Graph& g);

// Small builders used by tests, fixtures and pattern materialization.
SmallGraph make_path(std::size_t edges);
SmallGraph make_cycle(std::size_t n);
SmallGraph make_star(std::size_t leaves);
SmallGraph make_clique(std::size_t n);
SmallGraph make_graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges);

}  // namespace canned
