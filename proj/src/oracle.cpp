#include "canned/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "canned/isomorphism.hpp"
#include "canned/rng.hpp"

namespace canned {

std::vector<char> covered_edges(const std::vector<SmallGraph>& patterns, const SmallGraph& g,
                                std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw SizeGuard("exact coverage limited to " + std::to_string(max_vertices) + " vertices");
  std::vector<char> covered(g.edge_count(), 0);
  for (const auto& p : patterns) {
    if (p.edge_count() == 0) continue;
    enumerate_embeddings(p, g, [&](const Embedding& m) {
      for (EdgeIndex e : embedded_edges(p, g, m)) covered[e] = 1;
      return true;
    });
  }
  return covered;
}

std::size_t exact_coverage(const std::vector<SmallGraph>& patterns, const SmallGraph& g,
                           std::size_t max_vertices) {
  auto c = covered_edges(patterns, g, max_vertices);
  return static_cast<std::size_t>(std::count(c.begin(), c.end(), 1));
}

SetFunctions::SetFunctions(std::vector<SmallGraph> universe, SmallGraph target)
    : patterns_(std::move(universe)), target_(std::move(target)) {
  if (patterns_.size() > 20) throw SizeGuard("set-function universe limited to 20 patterns");
  std::vector<Signature> sig;
  for (const auto& p : patterns_) {
    covers_.push_back(covered_edges({p}, target_));
    cog_.push_back(cognitive_load(p));
    sig.push_back(netsimile_signature(p));
  }
  const std::size_t n = patterns_.size();
  sim_.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sim_[i][j] = signature_similarity(sig[i], sig[j]);
}

double SetFunctions::coverage(std::uint32_t mask) const {
  if (target_.edge_count() == 0) return 0;
  std::size_t c = 0;
  for (EdgeIndex e = 0; e < target_.edge_count(); ++e) {
    bool hit = false;
    for (std::size_t i = 0; i < patterns_.size() && !hit; ++i) hit = (mask >> i & 1u) && covers_[i][e];
    c += hit;
  }
  return static_cast<double>(c) / static_cast<double>(target_.edge_count());
}

double SetFunctions::pairwise_similarity(std::uint32_t mask) const {
  double s = 0;
  for (std::size_t i = 0; i < patterns_.size(); ++i)
    for (std::size_t j = i + 1; j < patterns_.size(); ++j)
      if ((mask >> i & 1u) && (mask >> j & 1u)) s += sim_[i][j];
  return s;
}

double SetFunctions::cognitive(std::uint32_t mask) const {
  double s = 0;
  for (std::size_t i = 0; i < patterns_.size(); ++i)
    if (mask >> i & 1u) s += cog_[i];
  return s;
}

double SetFunctions::score(std::uint32_t mask) const {
  const int n = std::popcount(mask);
  if (n == 0) return 0;
  double f_sim = 0;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (!(mask >> i & 1u)) continue;
    double best = 0;
    for (std::size_t j = 0; j < patterns_.size(); ++j)
      if (j != i && (mask >> j & 1u)) best = std::max(best, sim_[i][j]);
    f_sim += best;
  }
  return per_set_score(coverage(mask), f_sim / n, cognitive(mask) / n);
}

const char* metric_name(SetMetric m) {
  switch (m) {
    case SetMetric::Coverage: return "coverage";
    case SetMetric::PairwiseSimilarity: return "pairwise-similarity";
    case SetMetric::CognitiveLoad: return "cognitive-load";
    case SetMetric::Score: return "score";
  }
  return "?";
}

PropertyReport check_submodularity(const SetFunctions& f, SetMetric metric, std::size_t trials,
                                   std::uint64_t seed) {
  constexpr double kTol = 1e-12;
  const std::size_t n = f.universe_size();
  if (n < 2) throw std::invalid_argument("universe needs at least 2 patterns");
  auto rng = substream(seed, metric_name(metric));
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  auto value = [&](std::uint32_t m) {
    switch (metric) {
      case SetMetric::Coverage: return f.coverage(m);
      case SetMetric::PairwiseSimilarity: return f.pairwise_similarity(m);
      case SetMetric::CognitiveLoad: return f.cognitive(m);
      case SetMetric::Score: return f.score(m);
    }
    return 0.0;
  };
  PropertyReport rep;
  rep.metric = metric;
  rep.min_value = std::numeric_limits<double>::infinity();
  rep.max_value = -std::numeric_limits<double>::infinity();
  const std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
  while (rep.trials < trials) {
    std::uint32_t b = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (coin(rng)) b |= 1u << i;
    if (b == full) continue;
    std::uint32_t a = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((b >> i & 1u) && coin(rng)) a |= 1u << i;
    std::size_t j = pick(rng);
    while (b >> j & 1u) j = pick(rng);
    const std::uint32_t bit = 1u << j;
    ++rep.trials;
    const double fa = value(a), fb = value(b), faj = value(a | bit), fbj = value(b | bit);
    for (double v : {fa, fb, faj, fbj}) {
      rep.min_value = std::min(rep.min_value, v);
      rep.max_value = std::max(rep.max_value, v);
    }
    bool bad = false;
    switch (metric) {
      case SetMetric::Coverage: bad = faj - fa < fbj - fb - kTol; break;
      case SetMetric::PairwiseSimilarity:
      case SetMetric::CognitiveLoad: bad = faj - fa > fbj - fb + kTol; break;
      case SetMetric::Score:
        bad = fa < -kTol || fb < -kTol || faj < -kTol || fbj < -kTol || fa > 1 + kTol || fb > 1 + kTol ||
              faj > 1 + kTol || fbj > 1 + kTol;
        // Marginal gains taken from non-empty sets only, where s is defined.
        for (auto [base, with] : {std::pair{a, a | bit}, std::pair{b, b | bit}}) {
          if (base == 0) continue;
          const double d = value(with) - value(base);
          if (d > kTol) ++rep.increases;
          if (d < -kTol) ++rep.decreases;
        }
        break;
    }
    if (bad) {
      if (rep.violations == 0) {
        std::ostringstream os;
        os << "A=" << a << " B=" << b << " j=" << j;
        rep.witness = os.str();
      }
      ++rep.violations;
    }
  }
  return rep;
}

OptResult brute_force_opt(const std::vector<ScoredCandidate>& cands, int gamma) {
  const std::size_t n = cands.size();
  if (gamma <= 0) throw std::invalid_argument("gamma must be > 0");
  const std::size_t k_max = std::min<std::size_t>(gamma, n);
  double total = 0, c = 1;
  for (std::size_t k = 1; k <= k_max; ++k) {
    c = c * static_cast<double>(n - k + 1) / static_cast<double>(k);
    total += c;
  }
  if (total > 1e6) throw SizeGuard("brute-force search exceeds 10^6 subsets");
  OptResult best;
  best.score = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx;
  std::vector<const ScoredCandidate*> members;
  // Depth-first over combinations in lexicographic order.
  auto rec = [&](auto& self, std::size_t start) -> void {
    if (!idx.empty()) {
      members.clear();
      for (std::size_t i : idx) members.push_back(&cands[i]);
      const double s = set_score(members).s;
      if (s > best.score) {
        best.score = s;
        best.members = idx;
      }
    }
    if (idx.size() == k_max) return;
    for (std::size_t i = start; i < n; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  if (best.members.empty()) best.score = 0;
  return best;
}

}  // namespace canned
