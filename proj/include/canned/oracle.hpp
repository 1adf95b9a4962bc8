#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "canned/graph.hpp"
#include "canned/scoring.hpp"

namespace canned {

class SizeGuard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edges of g lying in at least one embedding of some pattern; indexed by g's
// edge index. Throws SizeGuard when g has more than max_vertices vertices.
std::vector<char> covered_edges(const std::vector<SmallGraph>& patterns, const SmallGraph& g,
                                std::size_t max_vertices = 60);
std::size_t exact_coverage(const std::vector<SmallGraph>& patterns, const SmallGraph& g,
                           std::size_t max_vertices = 60);

// Exact set functions over a universe of at most 20 patterns, subsets as bitmasks.
class SetFunctions {
 public:
  SetFunctions(std::vector<SmallGraph> universe, SmallGraph target);

  std::size_t universe_size() const { return patterns_.size(); }
  double coverage(std::uint32_t mask) const;             // |E+| / |E|
  double pairwise_similarity(std::uint32_t mask) const;  // sum over unordered pairs
  double cognitive(std::uint32_t mask) const;            // sum of cog
  // (cov - mean max-sim - mean cog + 2) / 3; 0 for the empty set.
  double score(std::uint32_t mask) const;

 private:
  std::vector<SmallGraph> patterns_;
  SmallGraph target_;
  std::vector<std::vector<char>> covers_;
  std::vector<double> cog_;
  std::vector<std::vector<double>> sim_;
};

enum class SetMetric { Coverage, PairwiseSimilarity, CognitiveLoad, Score };
const char* metric_name(SetMetric m);

struct PropertyReport {
  SetMetric metric = SetMetric::Coverage;
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::size_t increases = 0;  // Score only: marginal gain > 0 witnessed
  std::size_t decreases = 0;  // Score only: marginal gain < 0 witnessed
  double min_value = 0, max_value = 0;
  std::string witness;  // first violating (A, B, j)
};

// Samples A subset-of B and j outside B. Coverage must be submodular, the
// pairwise similarity and cognitive sums supermodular; Score must stay in [0,1].
PropertyReport check_submodularity(const SetFunctions& f, SetMetric metric, std::size_t trials,
                                   std::uint64_t seed);

struct OptResult {
  std::vector<std::size_t> members;
  double score = 0;
};

// Exhaustive search over all subsets of size 1..gamma; throws SizeGuard past 10^6 subsets.
OptResult brute_force_opt(const std::vector<ScoredCandidate>& cands, int gamma);

}  // namespace canned
