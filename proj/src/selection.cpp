#include "canned/selection.hpp"

#include <algorithm>
#include <stdexcept>

#include "canned/isomorphism.hpp"
#include "canned/rng.hpp"

namespace canned {

constexpr std::int64_t kParallelPool = 512;

void Plug::validate() const {
  if (eta_min <= 2) throw std::invalid_argument("eta_min must be > 2");
  if (eta_max < eta_min) throw std::invalid_argument("eta_max must be >= eta_min");
  if (gamma <= 0) throw std::invalid_argument("gamma must be > 0");
  if (per_size_cap && *per_size_cap <= 0) throw std::invalid_argument("per-size cap must be > 0");
}

bool within_plug(const Pattern& p, const Plug& plug) {
  const auto z = static_cast<int>(p.size());
  return z >= plug.eta_min && z <= plug.eta_max;
}

std::vector<Pattern> prune(std::vector<Pattern> cands, const Plug& plug, std::uint64_t delta) {
  // Candidates isomorphic to a default pattern (C_3 is the 3-cycle) add nothing.
  const auto defaults = default_patterns();
  auto is_default_shape = [&](const Pattern& p) {
    for (const auto& d : defaults)
      if (are_isomorphic(d.graph, p.graph)) return true;
    return false;
  };
  std::erase_if(cands, [&](const Pattern& p) {
    return !within_plug(p, plug) || !p.materialized() || p.freq < delta || is_default_shape(p);
  });
  return cands;
}

PoolScorer::PoolScorer(const std::vector<ScoredCandidate>& pool) : pool_(&pool) {}

void PoolScorer::reset() {
  members_.clear();
  member_max_.clear();
  rows_.clear();
  f_cov_ = f_cog_ = 0;
}

double PoolScorer::score_if_added(std::size_t c) const {
  const auto& x = (*pool_)[c];
  double f_sim = 0, own = 0;
  for (std::size_t k = 0; k < members_.size(); ++k) {
    const double r = rows_[k][c];
    f_sim += std::max(member_max_[k], r);
    own = std::max(own, r);
  }
  f_sim += own;
  return compose_score(f_cov_ + x.cov_ub_norm, f_sim, f_cog_ + x.cog, members_.size() + 1).s;
}

void PoolScorer::rescore_serial(const std::vector<char>& available, std::vector<double>& out) const {
  for (std::size_t c = 0; c < size(); ++c)
    if (available[c]) out[c] = score_if_added(c);
}

void PoolScorer::rescore(const std::vector<char>& available, std::vector<double>& out) const {
  const std::int64_t n = static_cast<std::int64_t>(size());
  // Thread start-up costs more than a small pool's rescoring.
  if (n < kParallelPool) return rescore_serial(available, out);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < n; ++c)
    if (available[c]) out[c] = score_if_added(static_cast<std::size_t>(c));
}

void PoolScorer::commit(std::size_t c) {
  const auto& pool = *pool_;
  std::vector<double> row(pool.size());
  const std::int64_t n = static_cast<std::int64_t>(pool.size());
#pragma omp parallel for schedule(static) if (n >= kParallelPool)
  for (std::int64_t i = 0; i < n; ++i)
    row[i] = signature_similarity(pool[c].signature, pool[i].signature);
  double own = 0;
  for (std::size_t k = 0; k < members_.size(); ++k) {
    member_max_[k] = std::max(member_max_[k], rows_[k][c]);
    own = std::max(own, rows_[k][c]);
  }
  members_.push_back(c);
  member_max_.push_back(own);
  rows_.push_back(std::move(row));
  f_cov_ += pool[c].cov_ub_norm;
  f_cog_ += pool[c].cog;
}

SetScore PoolScorer::current() const {
  double f_sim = 0;
  for (double m : member_max_) f_sim += m;
  return compose_score(f_cov_, f_sim, f_cog_, members_.size());
}

PatternSet select(std::vector<ScoredCandidate> pool, const Plug& plug, std::uint64_t seed) {
  plug.validate();
  std::stable_sort(pool.begin(), pool.end(),
                   [](const ScoredCandidate& a, const ScoredCandidate& b) { return a.pattern.id < b.pattern.id; });
  std::vector<std::size_t> sizes;
  for (const auto& c : pool) sizes.push_back(c.pattern.size());
  PoolScorer sc(pool);
  auto rng = substream(seed, "selection");
  SelectionTrace tr = select_with(sc, plug.gamma, rng, &sizes, plug.per_size_cap);

  PatternSet out;
  out.defaults = default_patterns();
  out.seed = seed;
  std::vector<const ScoredCandidate*> members;
  for (std::size_t i = 0; i < tr.picks.size(); ++i) {
    members.push_back(&pool[tr.picks[i]]);
    out.score_trace.push_back(set_score(members));
  }
  for (std::size_t i = 0; i < tr.picks.size(); ++i)
    out.selected.push_back({std::move(pool[tr.picks[i]]), static_cast<int>(i + 1)});
  return out;
}

}  // namespace canned
