#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "canned/graph.hpp"

namespace canned {

enum class PatternClass : std::uint8_t {
  Default,
  Chord,      // k-CP
  Composite,  // CCP
  Star,
  Asterism,
  Path,
  Cycle,
  Unique,
  Random,
};

// Kinds of composite chord pattern, anchored on C_k1 with truss edge e1:
//   TN: a non-truss edge of C_k1 is the truss edge of C_k2 (NT(k1,k2) is TN(k2,k1)).
//   NN: merged edge is non-truss in both and the two truss edges are disjoint.
//   NO: merged edge is non-truss in both and the two truss edges share a vertex.
enum class CcpKind : std::uint8_t { TN, NN, NO };

enum class Region : std::uint8_t { Tir, Tor, Whole };

// Coverage normalization groups.
enum class CoverageClass : std::uint8_t { Chord, Composite, Star, Asterism, Small, Random, None };

struct Pattern {
  PatternClass cls = PatternClass::Unique;
  CcpKind kind = CcpKind::TN;  // meaningful for Composite only
  std::vector<int> params;     // k | k1,k2 | leaves | center degrees | edges
  SmallGraph graph;
  std::vector<EdgeId> truss_edges;
  std::uint64_t freq = 0;
  Region region = Region::Whole;
  std::string id;
  // Edge count for patterns kept by frequency only (too large to build).
  std::size_t nominal_edges = 0;

  std::size_t size() const { return graph.vertex_count() ? graph.edge_count() : nominal_edges; }
  bool materialized() const { return graph.vertex_count() > 0; }
};

// Frequency-only placeholder for a pattern beyond eta_max.
Pattern nominal_pattern(PatternClass cls, int k, std::size_t edges);

const char* class_name(PatternClass c);
const char* kind_name(CcpKind k);
CoverageClass coverage_class(PatternClass c);

// Builds the canonical id ("kcp-4", "ccp-nn-5-4", "asterism-6-7", ...).
std::string make_pattern_id(const Pattern& p);

// Deterministic ordering across classes: class, then params, then id.
bool pattern_less(const Pattern& a, const Pattern& b);

class SizeOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// C_k: truss edge (0,1), wedges 2..k-1.
Pattern chord_pattern(int k);
// Pattern of the given kind; throws SizeOverflow when |E| > eta_max.
Pattern composite_pattern(CcpKind kind, int k1, int k2, int eta_max);
std::size_t composite_edge_count(int k1, int k2);
Pattern star_pattern(int leaves);
// Chain of stars; degrees are the center degrees inside the pattern.
Pattern asterism_pattern(const std::vector<int>& center_degrees);
std::size_t asterism_edge_count(const std::vector<int>& center_degrees);
Pattern path_pattern(int edges);
Pattern cycle_pattern(int n);
Pattern unique_pattern(SmallGraph g, int serial);

// 1-path, 2-path, 3-cycle, 4-cycle.
std::vector<Pattern> default_patterns();

}  // namespace canned
