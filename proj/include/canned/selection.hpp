#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "canned/pattern.hpp"
#include "canned/scoring.hpp"

namespace canned {

struct Plug {
  int eta_min = 3;
  int eta_max = 15;
  int gamma = 30;
  std::optional<int> per_size_cap;

  // Throws std::invalid_argument unless eta_min > 2, eta_max >= eta_min, gamma > 0.
  void validate() const;
};

bool within_plug(const Pattern& p, const Plug& plug);
// Drops candidates with |E| outside [eta_min, eta_max] or freq < delta.
std::vector<Pattern> prune(std::vector<Pattern> cands, const Plug& plug, std::uint64_t delta);

// Incremental set scorer over a scored pool. Keeps, for every member, its
// best similarity to the rest of the set, plus one similarity row per member.
class PoolScorer {
 public:
  explicit PoolScorer(const std::vector<ScoredCandidate>& pool);

  std::size_t size() const { return pool_->size(); }
  void reset();
  double score_if_added(std::size_t c) const;
  // out[c] = score_if_added(c) for available c; others untouched.
  void rescore_serial(const std::vector<char>& available, std::vector<double>& out) const;
  void rescore(const std::vector<char>& available, std::vector<double>& out) const;
  void commit(std::size_t c);
  SetScore current() const;
  const std::vector<std::size_t>& members() const { return members_; }

 private:
  const std::vector<ScoredCandidate>* pool_;
  std::vector<std::size_t> members_;
  std::vector<double> member_max_;
  std::vector<std::vector<double>> rows_;
  double f_cov_ = 0, f_cog_ = 0;
};

struct SelectionTrace {
  std::vector<std::size_t> picks;  // pool indices in selection order
  std::vector<double> scores;      // s_best after each pick
};

// Randomized greedy. Scorer needs size(), reset(), commit(c) and
// rescore(available, out). The first pick is the strict argmax (ties keep the
// lower index); later picks are uniform over candidates beating s_best.
// sizes/cap implement the optional per-size allowance.
template <class Scorer>
SelectionTrace select_with(Scorer& sc, int gamma, std::mt19937_64& rng,
                           const std::vector<std::size_t>* sizes = nullptr,
                           std::optional<int> cap = std::nullopt) {
  SelectionTrace tr;
  sc.reset();
  const std::size_t n = sc.size();
  std::vector<char> available(n, 1);
  std::vector<double> s(n, 0.0);
  std::vector<int> used_per_size;
  double s_best = 0;
  for (int round = 0; round < gamma; ++round) {
    if (sizes && cap) {
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t z = (*sizes)[c];
        if (z < used_per_size.size() && used_per_size[z] >= *cap) available[c] = 0;
      }
    }
    sc.rescore(available, s);
    std::optional<std::size_t> pick;
    if (tr.picks.empty()) {
      double best = s_best;
      for (std::size_t c = 0; c < n; ++c)
        if (available[c] && s[c] > best) {
          best = s[c];
          pick = c;
        }
    } else {
      std::vector<std::size_t> good;
      for (std::size_t c = 0; c < n; ++c)
        if (available[c] && s[c] > s_best) good.push_back(c);
      if (!good.empty()) {
        std::uniform_int_distribution<std::size_t> u(0, good.size() - 1);
        pick = good[u(rng)];
      }
    }
    if (!pick) break;
    s_best = s[*pick];
    available[*pick] = 0;
    sc.commit(*pick);
    tr.picks.push_back(*pick);
    tr.scores.push_back(s_best);
    if (sizes) {
      const std::size_t z = (*sizes)[*pick];
      if (used_per_size.size() <= z) used_per_size.resize(z + 1, 0);
      ++used_per_size[z];
    }
  }
  return tr;
}

struct SelectedPattern {
  ScoredCandidate cand;
  int rank = 0;  // 1-based selection order
};

struct PatternSet {
  std::vector<Pattern> defaults;
  std::vector<SelectedPattern> selected;
  std::vector<SetScore> score_trace;
  std::uint64_t seed = 0;
};

// Sorts the pool by id, runs the greedy on a PoolScorer and packages the result.
PatternSet select(std::vector<ScoredCandidate> pool, const Plug& plug, std::uint64_t seed);

}  // namespace canned
