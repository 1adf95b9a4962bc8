#include "canned/tir_patterns.hpp"

#include <algorithm>

namespace canned {

namespace {

struct Wedge {
  VertexId w;
  std::uint8_t m;  // min(t(a,w), t(b,w))
};

// Wedges of (a,b) inside g_t with their CCP level.
void wedges(const DecompositionResult& r, VertexId a, VertexId b, std::vector<Wedge>& out) {
  out.clear();
  const Graph& g = r.g_t;
  auto na = g.neighbors(a);
  auto ea = g.incident(a);
  auto nb = g.neighbors(b);
  auto eb = g.incident(b);
  std::size_t i = 0, j = 0;
  while (i < na.size() && j < nb.size()) {
    if (na[i] < nb[j]) ++i;
    else if (nb[j] < na[i]) ++j;
    else {
      out.push_back({na[i], std::min(r.t_of_gt[ea[i]], r.t_of_gt[eb[j]])});
      ++i;
      ++j;
    }
  }
}


// Largest k2 with |E(CCP(k1,k2))| <= eta_max.
int k2_size_cap(int k1, int eta_max) { return (eta_max + 7 - 2 * k1) / 2; }

struct Scratch {
  std::vector<std::uint32_t> mark;
  std::uint32_t stamp = 0;
  std::vector<Wedge> w1, w2, w3;

  explicit Scratch(std::size_t n) : mark(n, 0) {}
  void next_stamp() {
    if (++stamp == 0) {
      std::fill(mark.begin(), mark.end(), 0);
      stamp = 1;
    }
  }
};

// Marks NB_cc(k1, e1) and returns its size.
std::size_t mark_level(Scratch& s, const std::vector<Wedge>& w1, int k1) {
  s.next_stamp();
  std::size_t n = 0;
  for (const auto& x : w1)
    if (x.m >= k1) {
      s.mark[x.w] = s.stamp;
      ++n;
    }
  return n;
}

// |NB(k2, e) \ excl| and how many of those are outside the marked set.
std::pair<std::size_t, std::size_t> level_counts(const Scratch& s, const std::vector<Wedge>& ws,
                                                 int k2, VertexId ex1, VertexId ex2) {
  std::size_t in = 0, fresh = 0;
  for (const auto& x : ws) {
    if (x.m < k2 || x.w == ex1 || x.w == ex2) continue;
    ++in;
    fresh += s.mark[x.w] != s.stamp;
  }
  return {in, fresh};
}

void process_anchor(const DecompositionResult& r, EdgeIndex e1, int eta_max, Scratch& s,
                    CompositeCounts& out) {
  const Graph& g = r.g_t;
  const EdgeId uv = g.edge(e1);
  const int t1 = r.t_of_gt[e1];
  if (t1 < 4) return;
  wedges(r, uv.u, uv.v, s.w1);

  for (int k1 = t1; k1 >= 4; --k1) {
    const int cap = k2_size_cap(k1, eta_max);
    if (cap < 3) continue;
    const std::size_t nb1 = mark_level(s, s.w1, k1);

    // TN: e2 = (a,w) with w in NB(k1,e1) hosts the truss edge of C_k2.
    int best_tn = 0;
    for (const auto& x : s.w1) {
      if (x.m < k1) continue;
      for (VertexId a : {uv.u, uv.v}) {
        const int t2 = r.t_of_gt[g.edge_index(a, x.w)];
        const int top = std::min(t2, cap);
        if (top <= best_tn) continue;
        wedges(r, a, x.w, s.w2);
        for (int k2 = top; k2 > std::max(best_tn, 2); --k2) {
          auto [in2, fresh2] = level_counts(s, s.w2, k2, uv.u, uv.v);
          if (static_cast<int>(in2) < k2 - 2) continue;
          if (static_cast<int>(nb1 + fresh2) < (k1 - 2) + (k2 - 2)) continue;
          best_tn = k2;
          break;
        }
      }
    }
    for (int k2 = 3; k2 <= best_tn; ++k2) out.add(CcpKind::TN, k1, k2, 1);

    // NN / NO: merged edge (a,b), b in NB(k1,e1), x a common neighbor of a,b.
    const int cap_nn = std::min(cap, k1);
    if (cap_nn < 3) continue;
    for (int side = 0; side < 2; ++side) {
      const VertexId a = side == 0 ? uv.u : uv.v;
      const VertexId v = side == 0 ? uv.v : uv.u;
      for (const auto& bx : s.w1) {
        if (bx.m < k1) continue;
        const VertexId b = bx.w;
        wedges(r, a, b, s.w2);  // candidates x
        for (const auto& xx : s.w2) {
          const VertexId x = xx.w;
          if (x == v) continue;
          const int lim = std::min<int>(cap_nn, xx.m);  // t(a,x), t(b,x) >= k2
          if (lim < 3) continue;
          for (CcpKind kind : {CcpKind::NN, CcpKind::NO}) {
            const VertexId p = kind == CcpKind::NN ? b : a;  // e3 = (p, x)
            const EdgeIndex e3 = g.edge_index(p, x);
            wedges(r, p, x, s.w3);
            int best = 0;
            for (int k2 = lim; k2 >= 3; --k2) {
              auto [in3, fresh3] = level_counts(s, s.w3, k2, a, b);
              if (static_cast<int>(in3) < k2 - 3) continue;
              // NB1 \ {a,b} drops b; b is never "fresh" relative to NB1.
              if (static_cast<int>(nb1 - 1 + fresh3) < (k1 - 3) + (k2 - 3)) continue;
              best = k2;
              break;
            }
            for (int k2 = 3; k2 <= best; ++k2) {
              if (k2 == k1 && !(e1 < e3)) continue;
              out.add(kind, k1, k2, 1);
            }
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<VertexId> ccp_node_neighborhood(const DecompositionResult& r, int k_prime, EdgeId e) {
  std::vector<Wedge> ws;
  wedges(r, e.u, e.v, ws);
  std::vector<VertexId> out;
  for (const auto& x : ws)
    if (x.m >= k_prime) out.push_back(x.w);
  return out;
}

std::vector<EdgeId> ccp_edge_neighborhood(const DecompositionResult& r, int k_prime, EdgeId e) {
  std::vector<EdgeId> out;
  for (VertexId w : ccp_node_neighborhood(r, k_prime, e)) {
    out.emplace_back(e.u, w);
    out.emplace_back(w, e.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> chord_frequencies(const DecompositionResult& r) {
  int kmax = 0;
  for (auto t : r.t_of_gt) kmax = std::max<int>(kmax, t);
  std::vector<std::uint64_t> hist(kmax + 2, 0), freq(kmax + 1, 0);
  for (auto t : r.t_of_gt) ++hist[t];
  std::uint64_t acc = 0;
  for (int k = kmax; k >= 3; --k) {
    acc += hist[k];
    freq[k] = acc;
  }
  return freq;
}

std::vector<Pattern> gen_chord_patterns(const DecompositionResult& r) {
  auto freq = chord_frequencies(r);
  std::vector<Pattern> out;
  for (int k = 3; k < static_cast<int>(freq.size()); ++k) {
    if (freq[k] == 0) continue;
    Pattern p = chord_pattern(k);
    p.freq = freq[k];
    out.push_back(std::move(p));
  }
  return out;
}

CompositeCounts::CompositeCounts(int eta_max) : bound_(eta_max + 1) {
  cells_.assign(3 * static_cast<std::size_t>(bound_) * bound_, 0);
}

std::size_t CompositeCounts::at(CcpKind kind, int k1, int k2) const {
  return (static_cast<std::size_t>(kind) * bound_ + k1) * bound_ + k2;
}

std::uint64_t CompositeCounts::get(CcpKind kind, int k1, int k2) const {
  if (kind != CcpKind::TN && k1 < k2) std::swap(k1, k2);
  if (k1 < 0 || k2 < 0 || k1 >= bound_ || k2 >= bound_) return 0;
  return cells_[at(kind, k1, k2)];
}

void CompositeCounts::add(CcpKind kind, int k1, int k2, std::uint64_t n) {
  if (kind != CcpKind::TN && k1 < k2) std::swap(k1, k2);
  cells_[at(kind, k1, k2)] += n;
}

CompositeCounts& CompositeCounts::operator+=(const CompositeCounts& o) {
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += o.cells_[i];
  return *this;
}

CompositeCounts count_composite_serial(const DecompositionResult& r, int eta_max) {
  CompositeCounts out(eta_max);
  Scratch s(r.g_t.vertex_count());
  for (EdgeIndex e = 0; e < r.g_t.edge_count(); ++e) process_anchor(r, e, eta_max, s, out);
  return out;
}

CompositeCounts count_composite(const DecompositionResult& r, int eta_max) {
  CompositeCounts total(eta_max);
  const std::int64_t m = static_cast<std::int64_t>(r.g_t.edge_count());
#pragma omp parallel
  {
    CompositeCounts local(eta_max);
    Scratch s(r.g_t.vertex_count());
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t e = 0; e < m; ++e)
      process_anchor(r, static_cast<EdgeIndex>(e), eta_max, s, local);
#pragma omp critical
    total += local;
  }
  return total;
}

std::vector<Pattern> composite_patterns_from_counts(const CompositeCounts& c, int eta_max) {
  std::vector<Pattern> out;
  for (CcpKind kind : {CcpKind::TN, CcpKind::NN, CcpKind::NO}) {
    for (int k1 = 4; k1 < c.bound(); ++k1) {
      for (int k2 = 3; k2 < c.bound(); ++k2) {
        if (kind != CcpKind::TN && k2 > k1) break;
        if (composite_edge_count(k1, k2) > static_cast<std::size_t>(eta_max)) break;
        std::uint64_t f = c.get(kind, k1, k2);
        if (f == 0) continue;
        Pattern p = composite_pattern(kind, k1, k2, eta_max);
        p.freq = f;
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

std::vector<Pattern> gen_composite_patterns(const DecompositionResult& r, int eta_max) {
  return composite_patterns_from_counts(count_composite(r, eta_max), eta_max);
}

}  // namespace canned
