#include "canned/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace canned {

std::size_t RegionSizes::of(Region r) const {
  switch (r) {
    case Region::Tir: return tir;
    case Region::Tor: return tor;
    case Region::Whole: return total();
  }
  return total();
}

double coverage_upper_bound(const Pattern& p, std::size_t region_edges, std::size_t total_edges) {
  if (total_edges == 0) throw std::domain_error("coverage bound on an empty graph");
  return static_cast<double>(p.size()) * static_cast<double>(p.freq) *
         (static_cast<double>(region_edges) / static_cast<double>(total_edges));
}

double normalize_value(double x, double lo, double hi) { return (x - lo + 1.0) / (hi - lo + 1.0); }

bool is_planar(const SmallGraph& g) {
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  if (n >= 3 && m > 3 * n - 6) return false;
  if (m < 9) return true;  // K5 and K3,3 need at least 9 edges
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(n);
  for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

int crossing_estimate(const SmallGraph& g) {
  if (is_planar(g)) return 0;
  const long bound = static_cast<long>(g.edge_count()) - 3 * static_cast<long>(g.vertex_count()) + 6;
  return static_cast<int>(std::max(1L, bound));
}

double density(const SmallGraph& g) {
  const double n = static_cast<double>(g.vertex_count());
  if (n < 2) return 0;
  return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1));
}

double cognitive_load(double sz, double d, double cr) {
  return 1.0 / (1.0 + std::exp(-0.5 * (sz + d + cr - 10.0)));
}

double cognitive_load(const SmallGraph& g) {
  return cognitive_load(static_cast<double>(g.edge_count()), density(g), crossing_estimate(g));
}

namespace {

void aggregate(std::vector<double> x, double* out) {
  const double n = static_cast<double>(x.size());
  if (x.empty()) {
    std::fill(out, out + 5, 0.0);
    return;
  }
  std::sort(x.begin(), x.end());
  const std::size_t h = x.size() / 2;
  const double median = x.size() % 2 ? x[h] : 0.5 * (x[h - 1] + x[h]);
  double mean = 0;
  for (double v : x) mean += v;
  mean /= n;
  double m2 = 0, m3 = 0, m4 = 0;
  for (double v : x) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  out[0] = median;
  out[1] = mean;
  out[2] = std::sqrt(m2);
  if (m2 < 1e-12) {
    out[3] = out[4] = 0;
  } else {
    out[3] = m3 / std::pow(m2, 1.5);
    out[4] = m4 / (m2 * m2) - 3.0;
  }
}

}  // namespace

Signature netsimile_signature(const SmallGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<double> deg(n), cc(n), tri(n);
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = static_cast<double>(g.degree(v));
    std::size_t t = 0;
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) t += g.has_edge(nb[i], nb[j]);
    tri[v] = static_cast<double>(t);
    cc[v] = nb.size() < 2 ? 0.0 : 2.0 * t / (deg[v] * (deg[v] - 1));
  }
  std::array<std::vector<double>, kFeatureCount> f;
  for (auto& col : f) col.resize(n);
  std::vector<char> in_ego(n, 0), seen(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    double nd = 0, ncc = 0;
    for (VertexId u : nb) {
      nd += deg[u];
      ncc += cc[u];
    }
    f[0][v] = deg[v];
    f[1][v] = cc[v];
    f[2][v] = nb.empty() ? 0 : nd / nb.size();
    f[3][v] = nb.empty() ? 0 : ncc / nb.size();
    const double ego_edges = deg[v] + tri[v];
    f[4][v] = ego_edges;
    // Outgoing edges: total degree of the egonet minus twice its internal edges.
    f[5][v] = deg[v] + nd - 2 * ego_edges;
    in_ego[v] = 1;
    for (VertexId u : nb) in_ego[u] = 1;
    std::size_t outside = 0;
    std::vector<VertexId> touched;
    auto visit = [&](VertexId x) {
      for (VertexId y : g.neighbors(x))
        if (!in_ego[y] && !seen[y]) {
          seen[y] = 1;
          touched.push_back(y);
          ++outside;
        }
    };
    visit(v);
    for (VertexId u : nb) visit(u);
    f[6][v] = static_cast<double>(outside);
    for (VertexId y : touched) seen[y] = 0;
    in_ego[v] = 0;
    for (VertexId u : nb) in_ego[u] = 0;
  }
  Signature s{};
  for (std::size_t k = 0; k < kFeatureCount; ++k) aggregate(std::move(f[k]), s.data() + 5 * k);
  return s;
}

double signature_similarity(const Signature& a, const Signature& b) {
  double d = 0;
  for (std::size_t i = 0; i < kSignatureSize; ++i) {
    const double den = std::abs(a[i]) + std::abs(b[i]);
    if (den > 0) d += std::abs(a[i] - b[i]) / den;
  }
  return 1.0 - d / static_cast<double>(kSignatureSize);
}

double netsimile_similarity(const SmallGraph& a, const SmallGraph& b) {
  return signature_similarity(netsimile_signature(a), netsimile_signature(b));
}

void normalize_coverage(std::vector<ScoredCandidate>& cands) {
  constexpr int kClasses = static_cast<int>(CoverageClass::None) + 1;
  std::array<double, kClasses> lo, hi;
  lo.fill(INFINITY);
  hi.fill(-INFINITY);
  for (const auto& c : cands) {
    const int k = static_cast<int>(coverage_class(c.pattern.cls));
    lo[k] = std::min(lo[k], c.cov_ub);
    hi[k] = std::max(hi[k], c.cov_ub);
  }
  for (auto& c : cands) {
    const int k = static_cast<int>(coverage_class(c.pattern.cls));
    c.cov_ub_norm = normalize_value(c.cov_ub, lo[k], hi[k]);
  }
}

std::vector<ScoredCandidate> score_candidates(std::vector<Pattern> pool, const RegionSizes& regions) {
  std::vector<ScoredCandidate> out(pool.size());
  const std::int64_t n = static_cast<std::int64_t>(pool.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    auto& c = out[i];
    c.pattern = std::move(pool[i]);
    c.cov_ub = coverage_upper_bound(c.pattern, regions.of(c.pattern.region), regions.total());
    c.cog = cognitive_load(c.pattern.graph);
    c.signature = netsimile_signature(c.pattern.graph);
  }
  normalize_coverage(out);
  return out;
}

SetScore compose_score(double f_cov, double f_sim, double f_cog, std::size_t n) {
  if (n == 0) throw std::invalid_argument("score of an empty pattern set");
  const double dn = static_cast<double>(n);
  return {f_cov, f_sim, f_cog, (f_cov - f_sim - f_cog + 2 * dn) / (3 * dn), n};
}

double per_set_score(double cov_mean, double sim_mean, double cog_mean) {
  return (cov_mean - sim_mean - cog_mean + 2.0) / 3.0;
}

SetScore set_score(const std::vector<const ScoredCandidate*>& members) {
  double f_cov = 0, f_sim = 0, f_cog = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    f_cov += members[i]->cov_ub_norm;
    f_cog += members[i]->cog;
    double best = 0;
    for (std::size_t j = 0; j < members.size(); ++j)
      if (j != i) best = std::max(best, signature_similarity(members[i]->signature, members[j]->signature));
    f_sim += best;
  }
  return compose_score(f_cov, f_sim, f_cog, members.size());
}

}  // namespace canned
