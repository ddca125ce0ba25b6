#pragma once

#include <unordered_map>
#include <vector>

#include "surfcount/dp_engine.hpp"
#include "surfcount/graph.hpp"

namespace surfcount {

/// A concrete subgraph of a host: sorted vertex ids and sorted edge ids.
struct Subgraph {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  friend auto operator<=>(const Subgraph&, const Subgraph&) = default;
};

/// Number of injective maps P -> G preserving edges (and non-edges when
/// induced).
Count count_embeddings(const SimpleGraph& g, const SimpleGraph& p, bool induced);

/// Subgraphs of G isomorphic to P (induced subgraphs in induced mode), as
/// embedding count divided by |Aut(P)|. Throws InternalError if the
/// division is not exact.
Count brute_count(const SimpleGraph& g, const SimpleGraph& p, bool induced);

/// The same subgraphs listed explicitly as deduplicated embedding images,
/// sorted.
std::vector<Subgraph> brute_list(const SimpleGraph& g, const SimpleGraph& p, bool induced);

/// Exhaustive count over vertex subsets and their edge subsets, each tested
/// with an isomorphism check. Only for very small hosts.
Count brute_count_exhaustive(const SimpleGraph& g, const SimpleGraph& p, bool induced);

/// Isomorphs of P that meet every colour 1..q.
Count brute_colorful_count(const SimpleGraph& g, const Coloring& coloring, const SimpleGraph& p, bool induced);

/// All subgraphs of G_e (the edges `edges` of G and their endpoints) with at
/// most k vertices, grouped by entry key over `mid` (sorted). In induced
/// mode only induced subgraphs of G_e are enumerated.
std::unordered_map<EntryKey, Count, EntryKeyHash> brute_table(const SimpleGraph& g, const std::vector<EdgeId>& edges,
                                                              const std::vector<VertexId>& mid,
                                                              const Coloring& coloring, int k, bool induced);

}  // namespace surfcount
