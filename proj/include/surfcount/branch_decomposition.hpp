#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "surfcount/embedded_map.hpp"

namespace surfcount {

struct RadialGraph;

enum class TreeNodeKind : std::uint8_t { leaf, internal, root };

/// A ternary tree whose leaves carry the host edges. Optionally rooted at an
/// extra leaf carrying no edge.
class BranchDecomposition {
 public:
  struct Node {
    TreeNodeKind kind = TreeNodeKind::internal;
    EdgeId edge = -1;  // host edge of a leaf
  };

  BranchDecomposition() = default;
  BranchDecomposition(std::vector<Node> nodes, std::vector<std::array<int, 2>> tree_edges);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int tree_edge_count() const { return static_cast<int>(tree_edges_.size()); }
  const Node& node(int x) const { return nodes_[x]; }
  const std::array<int, 2>& tree_edge(int t) const { return tree_edges_[t]; }
  const std::vector<std::array<int, 2>>& tree_edges() const { return tree_edges_; }
  std::span<const int> incident(int x) const { return incident_[x]; }
  int other_end(int t, int x) const { return tree_edges_[t][0] == x ? tree_edges_[t][1] : tree_edges_[t][0]; }

  bool empty() const { return nodes_.empty(); }
  /// A single leaf and no tree edges (one-edge host).
  bool degenerate() const { return nodes_.size() == 1; }
  bool is_rooted() const { return root_ >= 0; }
  int root_node() const { return root_; }

  /// Number of leaves carrying host edges.
  int leaf_count() const;

  /// Checks ternarity, tree shape and that the leaves carry every host edge
  /// exactly once. Throws InputError.
  void validate(int host_edge_count) const;

 private:
  std::vector<Node> nodes_;
  std::vector<std::array<int, 2>> tree_edges_;
  std::vector<std::vector<int>> incident_;
  int root_ = -1;
};

/// Subdivides tree edge 0 and hangs a new root leaf off the subdivision
/// node. A degenerate decomposition is returned unchanged.
BranchDecomposition root(const BranchDecomposition& bd);

/// Parent/child structure of a rooted decomposition.
struct RootedView {
  int root_edge = -1;
  std::vector<int> lower_node;               // endpoint of each tree edge away from the root
  std::vector<std::array<int, 2>> children;  // {-1, -1} for edges ending in a leaf
  std::vector<int> post_order;               // tree edges, children first
};

RootedView rooted_view(const BranchDecomposition& bd);

struct MiddleSetAnnotation {
  std::vector<std::vector<VertexId>> mid;  // per tree edge, sorted
  int width = 0;
};

/// Exact middle sets. `host_edges` may contain loops and parallel edges.
MiddleSetAnnotation compute_middle_sets(const BranchDecomposition& bd, int host_vertex_count,
                                        const std::vector<std::array<VertexId, 2>>& host_edges);

/// Per tree edge of a decomposition built from a radial graph: the radial
/// faces on the side of tree_edge(t)[0] and on the side of tree_edge(t)[1].
struct SsdCertificate {
  std::vector<int> face_of_host_edge;
  std::vector<std::array<std::vector<int>, 2>> sides;
};

/// True iff for every tree edge the two face sets partition the radial
/// faces, each induces a connected subgraph of the radial dual, and every
/// host edge lies on the side of its leaf. Throws InputError when entries
/// are missing.
bool verify_certificate(const BranchDecomposition& bd, const SsdCertificate& cert, const RadialGraph& radial);

}  // namespace surfcount
