#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "canned/graph.hpp"

namespace canned {

// mapping[i] = target vertex for pattern vertex i.
using Embedding = std::vector<VertexId>;

bool are_isomorphic(const SmallGraph& a, const SmallGraph& b);

// Isomorphism-invariant fingerprint (degree sequence plus sorted neighbor
// degree multisets). Equal graphs hash equal; used to bucket before
// are_isomorphic.
std::uint64_t invariant_hash(const SmallGraph& g);

// Non-induced subgraph embedding avoiding forbidden target edges.
std::optional<Embedding> find_embedding(const SmallGraph& pattern, const SmallGraph& target,
                                        const std::set<EdgeId>& forbidden = {});

// Visits embeddings in deterministic order until the visitor returns false or
// `limit` embeddings have been produced. Returns the number visited.
std::size_t enumerate_embeddings(const SmallGraph& pattern, const SmallGraph& target,
                                 const std::function<bool(const Embedding&)>& visit,
                                 std::size_t limit = SIZE_MAX,
                                 const std::vector<bool>* forbidden_edges = nullptr);

// Target edge indices used by an embedding.
std::vector<EdgeIndex> embedded_edges(const SmallGraph& pattern, const SmallGraph& target,
                                      const Embedding& m);

}  // namespace canned
