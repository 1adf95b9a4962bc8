#include "canned/pattern.hpp"

#include <tuple>

namespace canned {

const char* class_name(PatternClass c) {
  switch (c) {
    case PatternClass::Default: return "default";
    case PatternClass::Chord: return "kcp";
    case PatternClass::Composite: return "ccp";
    case PatternClass::Star: return "star";
    case PatternClass::Asterism: return "asterism";
    case PatternClass::Path: return "path";
    case PatternClass::Cycle: return "cycle";
    case PatternClass::Unique: return "unique";
    case PatternClass::Random: return "random";
  }
  return "?";
}

const char* kind_name(CcpKind k) {
  switch (k) {
    case CcpKind::TN: return "tn";
    case CcpKind::NN: return "nn";
    case CcpKind::NO: return "no";
  }
  return "?";
}

CoverageClass coverage_class(PatternClass c) {
  switch (c) {
    case PatternClass::Chord: return CoverageClass::Chord;
    case PatternClass::Composite: return CoverageClass::Composite;
    case PatternClass::Star: return CoverageClass::Star;
    case PatternClass::Asterism: return CoverageClass::Asterism;
    case PatternClass::Path:
    case PatternClass::Cycle:
    case PatternClass::Unique: return CoverageClass::Small;
    case PatternClass::Random: return CoverageClass::Random;
    case PatternClass::Default: return CoverageClass::None;
  }
  return CoverageClass::None;
}

std::string make_pattern_id(const Pattern& p) {
  std::string id = class_name(p.cls);
  if (p.cls == PatternClass::Composite) id += std::string("-") + kind_name(p.kind);
  for (int x : p.params) id += "-" + std::to_string(x);
  return id;
}

bool pattern_less(const Pattern& a, const Pattern& b) {
  return std::tie(a.cls, a.kind, a.params, a.id) < std::tie(b.cls, b.kind, b.params, b.id);
}

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

Pattern finish(Pattern p, std::size_t n, EdgeList edges) {
  p.graph = Graph::from_edges(n, std::move(edges));
  p.id = make_pattern_id(p);
  return p;
}

}  // namespace

Pattern chord_pattern(int k) {
  if (k < 3) throw std::invalid_argument("chord pattern needs k >= 3");
  EdgeList e{{0, 1}};
  for (VertexId w = 2; w < static_cast<VertexId>(k); ++w) {
    e.emplace_back(0, w);
    e.emplace_back(1, w);
  }
  Pattern p;
  p.cls = PatternClass::Chord;
  p.params = {k};
  p.region = Region::Tir;
  p.truss_edges = {EdgeId(0, 1)};
  return finish(std::move(p), k, std::move(e));
}

std::size_t composite_edge_count(int k1, int k2) {
  return static_cast<std::size_t>(2 * k1 + 2 * k2 - 7);
}

Pattern composite_pattern(CcpKind kind, int k1, int k2, int eta_max) {
  if (k1 < 3 || k2 < 3 || (k1 == 3 && k2 == 3))
    throw std::invalid_argument("composite pattern needs k1,k2 >= 3 and (k1,k2) != (3,3)");
  if (composite_edge_count(k1, k2) > static_cast<std::size_t>(eta_max))
    throw SizeOverflow("composite pattern " + std::to_string(k1) + "," + std::to_string(k2) +
                       " exceeds eta_max");
  // C_k1 on (a,v) = (0,1) with wedges 2..k1-1; vertex b = 2 is the shared wedge.
  const VertexId a = 0, v = 1, b = 2;
  EdgeList e{{a, v}};
  for (VertexId w = 2; w < static_cast<VertexId>(k1); ++w) {
    e.emplace_back(a, w);
    e.emplace_back(v, w);
  }
  VertexId next = static_cast<VertexId>(k1);
  EdgeId second;
  switch (kind) {
    case CcpKind::TN: {
      // Truss edge (a,b) of C_k2 with k2-2 fresh wedges.
      second = EdgeId(a, b);
      for (int i = 0; i < k2 - 2; ++i, ++next) {
        e.emplace_back(a, next);
        e.emplace_back(b, next);
      }
      break;
    }
    case CcpKind::NN: {
      // Truss edge (b,x) of C_k2; a is one of its wedges.
      VertexId x = next++;
      second = EdgeId(b, x);
      e.emplace_back(b, x);
      e.emplace_back(a, x);
      for (int i = 0; i < k2 - 3; ++i, ++next) {
        e.emplace_back(b, next);
        e.emplace_back(x, next);
      }
      break;
    }
    case CcpKind::NO: {
      // Truss edge (a,x) of C_k2; b is one of its wedges.
      VertexId x = next++;
      second = EdgeId(a, x);
      e.emplace_back(a, x);
      e.emplace_back(b, x);
      for (int i = 0; i < k2 - 3; ++i, ++next) {
        e.emplace_back(a, next);
        e.emplace_back(x, next);
      }
      break;
    }
  }
  Pattern p;
  p.cls = PatternClass::Composite;
  p.kind = kind;
  p.params = {k1, k2};
  p.region = Region::Tir;
  p.truss_edges = {EdgeId(a, v), second};
  return finish(std::move(p), next, std::move(e));
}

Pattern nominal_pattern(PatternClass cls, int k, std::size_t edges) {
  Pattern p;
  p.cls = cls;
  p.params = {k};
  p.region = Region::Tor;
  p.nominal_edges = edges;
  p.id = make_pattern_id(p);
  return p;
}

Pattern star_pattern(int leaves) {
  EdgeList e;
  for (VertexId i = 1; i <= static_cast<VertexId>(leaves); ++i) e.emplace_back(0, i);
  Pattern p;
  p.cls = PatternClass::Star;
  p.params = {leaves};
  p.region = Region::Tor;
  return finish(std::move(p), leaves + 1, std::move(e));
}

std::size_t asterism_edge_count(const std::vector<int>& d) {
  std::size_t s = 0;
  for (int x : d) s += x;
  return d.empty() ? 0 : s - (d.size() - 1);
}

Pattern asterism_pattern(const std::vector<int>& d) {
  if (d.size() < 2) throw std::invalid_argument("asterism needs >= 2 centers");
  const std::size_t c = d.size();
  EdgeList e;
  for (VertexId i = 0; i + 1 < c; ++i) e.emplace_back(i, i + 1);
  VertexId next = static_cast<VertexId>(c);
  for (std::size_t i = 0; i < c; ++i) {
    int chain = (i == 0 || i + 1 == c) ? 1 : 2;
    for (int j = 0; j < d[i] - chain; ++j) e.emplace_back(static_cast<VertexId>(i), next++);
  }
  Pattern p;
  p.cls = PatternClass::Asterism;
  p.params = d;
  p.region = Region::Tor;
  return finish(std::move(p), next, std::move(e));
}

Pattern path_pattern(int edges) {
  Pattern p;
  p.cls = PatternClass::Path;
  p.params = {edges};
  p.region = Region::Tor;
  p.graph = make_path(edges);
  p.id = make_pattern_id(p);
  return p;
}

Pattern cycle_pattern(int n) {
  Pattern p;
  p.cls = PatternClass::Cycle;
  p.params = {n};
  p.region = Region::Tor;
  p.graph = make_cycle(n);
  p.id = make_pattern_id(p);
  return p;
}

Pattern unique_pattern(SmallGraph g, int serial) {
  Pattern p;
  p.cls = PatternClass::Unique;
  p.params = {static_cast<int>(g.edge_count()), serial};
  p.region = Region::Tor;
  p.graph = std::move(g);
  p.id = make_pattern_id(p);
  return p;
}

std::vector<Pattern> default_patterns() {
  std::vector<Pattern> out;
  auto add = [&](SmallGraph g, const char* id) {
    Pattern p;
    p.cls = PatternClass::Default;
    p.params = {static_cast<int>(g.edge_count())};
    p.graph = std::move(g);
    p.id = id;
    out.push_back(std::move(p));
  };
  add(make_path(1), "default-1-path");
  add(make_path(2), "default-2-path");
  add(make_cycle(3), "default-3-cycle");
  add(make_cycle(4), "default-4-cycle");
  return out;
}

}  // namespace canned
