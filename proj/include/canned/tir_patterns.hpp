#pragma once

#include <cstdint>
#include <vector>

#include "canned/pattern.hpp"
#include "canned/truss.hpp"

namespace canned {

// NB_cc(k', e): wedge vertices w of e=(u,v) with t(u,w) >= k' and t(w,v) >= k'.
std::vector<VertexId> ccp_node_neighborhood(const DecompositionResult& r, int k_prime, EdgeId e);

// EB_cc(k', e): the edges (u,w), (w,v) for w in NB_cc(k', e).
std::vector<EdgeId> ccp_edge_neighborhood(const DecompositionResult& r, int k_prime, EdgeId e);

// freq(C_k) for k = 3..max trussness; index k.
std::vector<std::uint64_t> chord_frequencies(const DecompositionResult& r);
std::vector<Pattern> gen_chord_patterns(const DecompositionResult& r);

// Frequencies keyed by (kind, k1, k2). TN is stored for every order; NN and NO
// are stored for k1 >= k2 and answered symmetrically.
class CompositeCounts {
 public:
  explicit CompositeCounts(int eta_max = 15);

  std::uint64_t get(CcpKind kind, int k1, int k2) const;
  // NT(k1,k2) is the same shape as TN(k2,k1).
  std::uint64_t get_nt(int k1, int k2) const { return get(CcpKind::TN, k2, k1); }
  void add(CcpKind kind, int k1, int k2, std::uint64_t n);
  CompositeCounts& operator+=(const CompositeCounts& o);
  bool operator==(const CompositeCounts& o) const { return cells_ == o.cells_; }
  int bound() const { return bound_; }

 private:
  std::size_t at(CcpKind kind, int k1, int k2) const;
  int bound_;
  std::vector<std::uint64_t> cells_;
};

CompositeCounts count_composite_serial(const DecompositionResult& r, int eta_max);
CompositeCounts count_composite(const DecompositionResult& r, int eta_max);

// Emits every (kind,k1,k2) with nonzero frequency and |E| <= eta_max.
std::vector<Pattern> gen_composite_patterns(const DecompositionResult& r, int eta_max);
std::vector<Pattern> composite_patterns_from_counts(const CompositeCounts& c, int eta_max);

}  // namespace canned
