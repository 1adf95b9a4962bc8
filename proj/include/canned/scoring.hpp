#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "canned/graph.hpp"
#include "canned/pattern.hpp"

namespace canned {

struct RegionSizes {
  std::size_t tir = 0;
  std::size_t tor = 0;
  std::size_t total() const { return tir + tor; }
  std::size_t of(Region r) const;
};

// |E_p| * freq * region/total; throws when total is 0.
double coverage_upper_bound(const Pattern& p, std::size_t region_edges, std::size_t total_edges);

// (x - lo + 1) / (hi - lo + 1).
double normalize_value(double x, double lo, double hi);

bool is_planar(const SmallGraph& g);
// 0 for planar graphs, otherwise the Euler bound clamped to at least 1.
int crossing_estimate(const SmallGraph& g);
double density(const SmallGraph& g);
double cognitive_load(double sz, double d, double cr);
double cognitive_load(const SmallGraph& g);

inline constexpr std::size_t kFeatureCount = 7;
inline constexpr std::size_t kSignatureSize = kFeatureCount * 5;
using Signature = std::array<double, kSignatureSize>;

// Per-vertex features aggregated by median, mean, std, skewness, kurtosis.
Signature netsimile_signature(const SmallGraph& g);
// 1 - Canberra(a,b)/35.
double signature_similarity(const Signature& a, const Signature& b);
double netsimile_similarity(const SmallGraph& a, const SmallGraph& b);

struct ScoredCandidate {
  Pattern pattern;
  double cov_ub = 0;
  double cov_ub_norm = 0;
  double cog = 0;
  Signature signature{};
};

// Fills cov_ub, cog and signature, then normalizes cov_ub within each coverage class.
std::vector<ScoredCandidate> score_candidates(std::vector<Pattern> pool, const RegionSizes& regions);
void normalize_coverage(std::vector<ScoredCandidate>& cands);

struct SetScore {
  double f_cov = 0;
  double f_sim = 0;
  double f_cog = 0;
  double s = 0;
  std::size_t size = 0;
};

// (f_cov - f_sim - f_cog + 2n) / (3n); throws on n = 0.
SetScore compose_score(double f_cov, double f_sim, double f_cog, std::size_t n);
// The per-iteration form with terms already divided by |P|: (cov - sim - cog + 2)/3.
double per_set_score(double cov_mean, double sim_mean, double cog_mean);

// f_sim = sum over members of the max similarity to any other member.
SetScore set_score(const std::vector<const ScoredCandidate*>& members);

}  // namespace canned
