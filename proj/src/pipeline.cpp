#include "canned/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "canned/isomorphism.hpp"
#include "canned/queries.hpp"
#include "canned/rng.hpp"
#include "canned/tir_patterns.hpp"
#include "canned/tor_patterns.hpp"

namespace canned {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

PipelineResult finish(CandidatePool pool, const LoadedGraph& g, const DecompositionResult& r, const RunConfig& cfg,
                      std::uint64_t delta, const std::string& source) {
  PipelineResult res;
  auto t0 = std::chrono::steady_clock::now();
  res.candidates = pool.patterns.size();
  auto pruned = prune(std::move(pool.patterns), cfg.plug, delta);
  res.after_prune = pruned.size();
  if (pruned.empty()) res.warnings.push_back("no candidates left after pruning; exporting defaults only");
  auto scored = score_candidates(std::move(pruned), pool.regions);
  PatternSet set = select(std::move(scored), cfg.plug, cfg.seed);
  res.times.ps = seconds_since(t0);
  res.exported = make_export(set, dataset_stats(cfg.dataset_name, g, r), cfg.plug, cfg.delta, cfg.epsilon, source);
  return res;
}

}  // namespace

void RunConfig::validate() const {
  plug.validate();
  if (epsilon < 1) throw std::invalid_argument("epsilon must be >= 1");
  if (workers < 0) throw std::invalid_argument("workers must be >= 0");
  if (plug.eta_max > 255) throw std::invalid_argument("eta_max must be <= 255");
}

CandidatePool generate_candidates(const DecompositionResult& r, int epsilon, int eta_min, int eta_max) {
  CandidatePool pool;
  pool.regions = {r.g_t.edge_count(), r.g_o.edge_count()};
  for (auto& p : gen_chord_patterns(r)) pool.patterns.push_back(std::move(p));
  for (auto& p : gen_composite_patterns(r, eta_max)) pool.patterns.push_back(std::move(p));
  StarPatterns stars = gen_star_patterns(r.g_o, epsilon, eta_max);
  for (auto& p : stars.stars) pool.patterns.push_back(std::move(p));
  for (auto& p : stars.asterisms) pool.patterns.push_back(std::move(p));
  Graph g_r = remove_star_edges(r.g_o, epsilon);
  for (auto& p : gen_small_patterns(g_r, eta_min, eta_max)) pool.patterns.push_back(std::move(p));
  return pool;
}

CandidatePool random_candidates(const Graph& g, const Plug& plug, std::size_t samples, std::uint64_t seed) {
  auto rng = substream(seed, "baseline");
  std::uniform_int_distribution<int> size(plug.eta_min, plug.eta_max);
  CandidatePool pool;
  pool.regions = {0, g.edge_count()};
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> bucket;
  std::unordered_map<int, int> serial;
  for (std::size_t i = 0; i < samples; ++i) {
    SmallGraph s = random_connected_subgraph(g, static_cast<std::size_t>(size(rng)), rng);
    auto& b = bucket[invariant_hash(s)];
    bool merged = false;
    for (std::size_t idx : b)
      if (are_isomorphic(pool.patterns[idx].graph, s)) {
        ++pool.patterns[idx].freq;
        merged = true;
        break;
      }
    if (merged) continue;
    Pattern p;
    p.cls = PatternClass::Random;
    const int e = static_cast<int>(s.edge_count());
    p.params = {e, serial[e]++};
    p.region = Region::Whole;
    p.graph = std::move(s);
    p.freq = 1;
    p.id = make_pattern_id(p);
    b.push_back(pool.patterns.size());
    pool.patterns.push_back(std::move(p));
  }
  return pool;
}

DatasetStats dataset_stats(const std::string& name, const LoadedGraph& g, const DecompositionResult& r) {
  DatasetStats s;
  s.name = name;
  s.vertices = g.graph.vertex_count();
  s.edges = g.graph.edge_count();
  if (s.edges > 0) {
    s.tir_fraction = tir_fraction(r);
    s.tor_fraction = 1.0 - s.tir_fraction;
  }
  return s;
}

PipelineResult run_select(const LoadedGraph& g, const DecompositionResult& r, const RunConfig& cfg) {
  cfg.validate();
  auto t0 = std::chrono::steady_clock::now();
  CandidatePool pool = generate_candidates(r, cfg.epsilon, cfg.plug.eta_min, cfg.plug.eta_max);
  const double cg = seconds_since(t0);
  PipelineResult res = finish(std::move(pool), g, r, cfg, cfg.delta, "select");
  res.times.cg = cg;
  return res;
}

PipelineResult run_baseline(const LoadedGraph& g, const DecompositionResult& r, const RunConfig& cfg) {
  cfg.validate();
  if (g.graph.edge_count() == 0) throw std::invalid_argument("baseline needs a non-empty graph");
  auto t0 = std::chrono::steady_clock::now();
  CandidatePool pool = random_candidates(g.graph, cfg.plug, cfg.baseline_samples, cfg.seed);
  const double cg = seconds_since(t0);
  // Random samples are nearly all distinct, so the frequency threshold is not applied.
  PipelineResult res = finish(std::move(pool), g, r, cfg, 0, "baseline");
  res.times.cg = cg;
  return res;
}

std::string summary_text(const PipelineResult& res) {
  const auto& e = res.exported;
  std::ostringstream os;
  char buf[128];
  os << "dataset " << e.dataset.name << ": |V|=" << e.dataset.vertices << " |E|=" << e.dataset.edges << '\n';
  std::snprintf(buf, sizeof buf, "TIR %.1f%% TOR %.1f%%\n", 100 * e.dataset.tir_fraction, 100 * e.dataset.tor_fraction);
  os << buf;
  os << "plug (" << e.plug.eta_min << ", " << e.plug.eta_max << ", " << e.plug.gamma << ")";
  if (e.plug.per_size_cap) os << " cap " << *e.plug.per_size_cap;
  os << " delta " << e.delta << " epsilon " << e.epsilon << " seed " << e.seed << '\n';
  os << "candidates " << res.candidates << ", after pruning " << res.after_prune << ", selected "
     << e.selected.size() << '\n';
  for (const auto& p : e.selected) {
    std::snprintf(buf, sizeof buf, "  %2d  %-22s |E|=%-3zu freq=%-8llu cov=%.3f cog=%.3f\n", p.rank, p.id.c_str(),
                  p.graph.edge_count(), static_cast<unsigned long long>(p.freq), p.cov_ub_norm, p.cog);
    os << buf;
  }
  if (!e.score_trace.empty()) {
    std::snprintf(buf, sizeof buf, "final score %.6f\n", e.score_trace.back().s);
    os << buf;
  }
  std::snprintf(buf, sizeof buf, "time GD %.3fs CG %.3fs PS %.3fs\n", res.times.gd, res.times.cg, res.times.ps);
  os << buf;
  for (const auto& w : res.warnings) os << "warning: " << w << '\n';
  return os.str();
}

}  // namespace canned
