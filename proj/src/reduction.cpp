#include "canned/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace canned {

std::size_t edge_at_a_time_steps(const SmallGraph& q) { return q.vertex_count() + q.edge_count(); }

double reduction_ratio(std::size_t step_total, std::size_t step_p) {
  if (step_total == 0) return 0;
  return (static_cast<double>(step_total) - static_cast<double>(step_p)) / static_cast<double>(step_total);
}

namespace {

struct TileState {
  const SmallGraph* q;
  std::vector<char> covered;
  std::vector<int> cover_count;
  std::vector<Placement> placements;

  explicit TileState(const SmallGraph& g) : q(&g), covered(g.edge_count(), 0), cover_count(g.vertex_count(), 0) {}

  void place(Placement p) {
    for (EdgeIndex e : p.edges) covered[e] = 1;
    for (VertexId v : p.map) ++cover_count[v];
    placements.push_back(std::move(p));
  }

  StepCounts counts() const {
    StepCounts c;
    c.placements = placements.size();
    for (int k : cover_count) {
      if (k == 0) ++c.nodes;
      else c.merges += static_cast<std::size_t>(k - 1);
    }
    for (char x : covered) c.edges += !x;
    return c;
  }
};

struct Candidate {
  long gain = 0;
  long damage = 0;
  Placement placement;
};

// Remaining (uncovered) graph relabeled so that vertices touching few
// triangles come first; the matcher then tries low-damage images first.
struct Remaining {
  Graph relabeled;
  std::vector<VertexId> to_query;      // relabeled id -> query id
  std::vector<std::uint32_t> support;  // per query edge, within the remaining graph
};

Remaining remaining_graph(const TileState& st) {
  const SmallGraph& q = *st.q;
  std::vector<bool> keep(q.edge_count());
  for (EdgeIndex e = 0; e < q.edge_count(); ++e) keep[e] = !st.covered[e];
  Graph r = q.edge_subgraph(keep);
  auto sup_r = edge_supports_serial(r);
  Remaining out;
  out.support.assign(q.edge_count(), 0);
  std::vector<std::uint64_t> weight(q.vertex_count(), 0);
  for (EdgeIndex e = 0; e < r.edge_count(); ++e) {
    const EdgeId& uv = r.edge(e);
    out.support[q.edge_index(uv.u, uv.v)] = sup_r[e];
    weight[uv.u] += sup_r[e];
    weight[uv.v] += sup_r[e];
  }
  std::vector<VertexId> order(q.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return weight[a] < weight[b]; });
  std::vector<VertexId> rank(q.vertex_count());
  for (VertexId i = 0; i < order.size(); ++i) rank[order[i]] = i;
  std::vector<std::pair<VertexId, VertexId>> e;
  for (const auto& uv : r.edges()) e.emplace_back(rank[uv.u], rank[uv.v]);
  out.relabeled = Graph::from_edges(q.vertex_count(), std::move(e));
  out.to_query = std::move(order);
  return out;
}

std::optional<Candidate> best_candidate(const TileState& st, const std::vector<const NamedPattern*>& pats,
                                        const TilingOptions& opt) {
  const SmallGraph& q = *st.q;
  Remaining rem = remaining_graph(st);
  if (rem.relabeled.edge_count() == 0) return std::nullopt;
  std::optional<Candidate> best;
  for (const NamedPattern* p : pats) {
    const SmallGraph& pg = p->graph;
    if (pg.edge_count() == 0 || pg.edge_count() > rem.relabeled.edge_count()) continue;
    const long upper = static_cast<long>(pg.vertex_count() + pg.edge_count()) - 1;
    if (best && upper < best->gain) continue;
    enumerate_embeddings(
        pg, rem.relabeled,
        [&](const Embedding& m) {
          Candidate c;
          c.placement.pattern_id = p->id;
          c.placement.map.resize(m.size());
          long overlap = 0;
          for (std::size_t i = 0; i < m.size(); ++i) {
            const VertexId v = rem.to_query[m[i]];
            c.placement.map[i] = v;
            overlap += st.cover_count[v] > 0;
          }
          for (EdgeIndex re : embedded_edges(pg, rem.relabeled, m)) {
            const EdgeId& ab = rem.relabeled.edge(re);
            const EdgeIndex qe = q.edge_index(rem.to_query[ab.u], rem.to_query[ab.v]);
            c.placement.edges.push_back(qe);
            c.damage += rem.support[qe];
          }
          c.gain = static_cast<long>(pg.vertex_count()) - 2 * overlap + static_cast<long>(pg.edge_count()) - 1;
          if (!best || c.gain > best->gain || (c.gain == best->gain && c.damage < best->damage))
            best = std::move(c);
          return true;
        },
        opt.embedding_cap);
  }
  return best;
}

StepPlan run_greedy(const SmallGraph& q, const std::vector<const NamedPattern*>& pats, const TilingOptions& opt,
                    const NamedPattern* forced) {
  TileState st(q);
  if (forced) {
    auto c = best_candidate(st, {forced}, opt);
    if (!c || c->gain <= 0) return {{}, st.counts()};
    st.place(std::move(c->placement));
  }
  while (true) {
    auto c = best_candidate(st, pats, opt);
    if (!c || c->gain <= 0) break;
    st.place(std::move(c->placement));
  }
  StepPlan plan;
  plan.counts = st.counts();
  plan.placements = std::move(st.placements);
  return plan;
}

}  // namespace

StepPlan greedy_plan(const SmallGraph& q, const std::vector<NamedPattern>& patterns, const TilingOptions& opt) {
  std::vector<const NamedPattern*> all, defaults;
  for (const auto& p : patterns) all.push_back(&p);
  std::stable_sort(all.begin(), all.end(), [](const NamedPattern* a, const NamedPattern* b) {
    if (a->graph.edge_count() != b->graph.edge_count()) return a->graph.edge_count() > b->graph.edge_count();
    return a->id < b->id;
  });
  for (const NamedPattern* p : all)
    if (p->is_default) defaults.push_back(p);

  StepPlan best = run_greedy(q, all, opt, nullptr);
  auto consider = [&](StepPlan p) {
    if (p.step_p() < best.step_p()) best = std::move(p);
  };
  if (defaults.size() != all.size()) consider(run_greedy(q, defaults, opt, nullptr));
  std::size_t starts = 0;
  for (const NamedPattern* p : all) {
    if (p->is_default || starts >= opt.forced_starts) continue;
    if (p->graph.edge_count() > q.edge_count()) continue;
    ++starts;
    StepPlan plan = run_greedy(q, all, opt, p);
    if (!plan.placements.empty()) consider(std::move(plan));
  }
  return best;
}

StepCounts evaluate_script(const SmallGraph& q, const std::vector<ScriptedPlacement>& plan) {
  std::vector<char> covered(q.edge_count(), 0);
  std::vector<int> cover_count(q.vertex_count(), 0);
  StepCounts c;
  for (const auto& sp : plan) {
    const SmallGraph& p = *sp.pattern;
    if (sp.map.size() != p.vertex_count()) throw std::invalid_argument("mapping does not cover the pattern");
    std::vector<VertexId> img = sp.map;
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end())
      throw std::invalid_argument("mapping is not injective");
    for (VertexId v : sp.map) {
      if (v >= q.vertex_count()) throw std::invalid_argument("mapping outside the query");
      ++cover_count[v];
    }
    for (const auto& e : p.edges()) {
      const EdgeIndex qe = q.edge_index(sp.map[e.u], sp.map[e.v]);
      if (qe == kNoEdge) {
        ++c.deletions;
        continue;
      }
      if (covered[qe]) throw std::invalid_argument("placements overlap on a query edge");
      covered[qe] = 1;
    }
    ++c.placements;
  }
  for (int k : cover_count) {
    if (k == 0) ++c.nodes;
    else c.merges += static_cast<std::size_t>(k - 1);
  }
  for (char x : covered) c.edges += !x;
  return c;
}

MuReport evaluate_queries(const std::vector<Query>& queries, const std::vector<NamedPattern>& patterns,
                          const TilingOptions& opt) {
  MuReport r;
  r.entries.resize(queries.size());
  const std::int64_t n = static_cast<std::int64_t>(queries.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    const Query& q = queries[i];
    MuEntry& e = r.entries[i];
    e.query_id = q.id;
    e.tag = q.tag;
    e.size = q.graph.edge_count();
    e.step_total = edge_at_a_time_steps(q.graph);
    e.step_p = greedy_plan(q.graph, patterns, opt).step_p();
    e.mu = reduction_ratio(e.step_total, e.step_p);
  }
  std::map<QueryTag, std::pair<double, std::size_t>> acc;
  double sum = 0;
  for (const auto& e : r.entries) {
    sum += e.mu;
    acc[e.tag].first += e.mu;
    ++acc[e.tag].second;
  }
  if (!r.entries.empty()) r.mean = sum / static_cast<double>(r.entries.size());
  for (const auto& [t, v] : acc) r.mean_by_tag[t] = v.first / static_cast<double>(v.second);
  return r;
}

void write_mu_table(const std::string& path, const MuReport& r) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "query_id\ttag\tsize\tstep_total\tstep_p\tmu\n";
  char buf[32];
  for (const auto& e : r.entries) {
    std::snprintf(buf, sizeof buf, "%.6f", e.mu);
    out << e.query_id << '\t' << tag_name(e.tag) << '\t' << e.size << '\t' << e.step_total << '\t' << e.step_p
        << '\t' << buf << '\n';
  }
}

void write_mu_summary(const std::string& path, const MuReport& r) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  char buf[64];
  out << "queries\t" << r.entries.size() << '\n';
  std::snprintf(buf, sizeof buf, "%.6f", r.mean);
  out << "mean_mu\t" << buf << '\n';
  for (const auto& [t, m] : r.mean_by_tag) {
    std::snprintf(buf, sizeof buf, "%.6f", m);
    out << "mean_mu." << tag_name(t) << '\t' << buf << '\n';
  }
}

}  // namespace canned
