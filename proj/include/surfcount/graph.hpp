#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "surfcount/embedded_map.hpp"

namespace surfcount {

/// An abstract simple graph (no embedding). Used for hosts stripped of their
/// rotation system, for patterns, and by the brute-force oracle.
class SimpleGraph {
 public:
  struct Incidence {
    VertexId neighbor;
    EdgeId edge;
    friend bool operator<(const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; }
  };

  explicit SimpleGraph(int vertex_count = 0);
  /// Throws InputError on loops, parallel edges or out-of-range endpoints.
  SimpleGraph(int vertex_count, const std::vector<std::array<VertexId, 2>>& edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::array<VertexId, 2>>& edges() const { return edges_; }
  const std::array<VertexId, 2>& edge(EdgeId e) const { return edges_[e]; }

  EdgeId add_edge(VertexId u, VertexId v);

  std::span<const Incidence> incident(VertexId v) const { return adjacency_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;

  /// Edge joining u and v, or -1.
  EdgeId edge_between(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return edge_between(u, v) >= 0; }

 private:
  std::vector<std::array<VertexId, 2>> edges_;
  std::vector<std::vector<Incidence>> adjacency_;  // sorted by neighbor
};

/// The host graph of a simple map; edge ids are preserved.
SimpleGraph underlying_graph(const Map& map);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<VertexId>> connected_components(const SimpleGraph& g);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const VertexId> vertices);

/// Graph on the same vertices keeping only edges with keep[e].
SimpleGraph edge_subgraph(const SimpleGraph& g, const std::vector<bool>& keep);

}  // namespace surfcount
