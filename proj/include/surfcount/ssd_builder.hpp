#pragma once

#include <array>
#include <vector>

#include "surfcount/branch_decomposition.hpp"
#include "surfcount/embedded_map.hpp"

namespace surfcount {

/// Spanning structures on the radial graph of a tripled map.
struct FirstStage {
  RadialGraph radial;
  std::vector<bool> in_bfs_tree;   // per radial edge
  std::vector<bool> in_dual_tree;  // per radial edge: its dual edge belongs to the face tree
  std::vector<EdgeId> leftover;    // radial edges in neither structure
  /// The face tree: per radial face, (neighbouring face, radial edge crossed).
  std::vector<std::vector<std::array<int, 2>>> face_tree;
};

/// BFS tree of the radial graph rooted at r, then a BFS spanning tree of the
/// radial dual seeded at face 0 that only crosses radial edges outside the
/// BFS tree. Throws InternalError unless exactly 2g radial edges are left
/// over.
FirstStage first_stage(const Map& tripled, VertexId r);

/// Turns the face tree into a branch decomposition of the original edges of
/// `tripled`: faces of added edges with degree 1 are deleted and those with
/// degree 2 suppressed, and original-edge faces of degree 2 receive a
/// pendant leaf. `certificate` is filled when non-null.
BranchDecomposition second_stage(const FirstStage& first, const Map& tripled, SsdCertificate* certificate = nullptr);

struct SsdResult {
  BranchDecomposition bd;  // unrooted; empty for edgeless hosts
  MiddleSetAnnotation mids;
  SsdCertificate certificate;
  Map tripled;
  RadialGraph radial;
  int genus = 0;
  int eccentricity = 0;
  int leftover_edges = 0;

  /// floor((2g + 1)(4d + 3) / 2)
  int width_bound() const { return (2 * genus + 1) * (4 * eccentricity + 3) / 2; }
};

/// Full construction with certificate. Hosts with at most one edge get the
/// trivial decomposition.
SsdResult construct_ssd(const Map& map, VertexId r);

/// Decomposition only (no certificate), for pipeline use.
BranchDecomposition build_ssd(const Map& map, VertexId r);

/// BFS layering plus, per layer, the vertices ordered as their parent darts
/// are met on an Euler tour of the BFS tree.
struct LayeredMap {
  const Map* map = nullptr;
  LayerStructure layers;
  std::vector<std::vector<VertexId>> tour_ordered;
};

LayeredMap prepare_layers(const Map& map, VertexId r);

/// Layers i..j plus an apex joined to every vertex of layer i: the result of
/// deleting non-tree edges at layers below i and contracting the tree part
/// below i into the apex. For i = 0 the apex is a pendant at the root.
/// Local edges of the window come first; apex edges are the last ones.
struct LayerGraph {
  Map map;
  VertexId apex = -1;
  int window_edge_count = 0;           // local edges [0, window_edge_count) lie in the window
  std::vector<VertexId> host_vertex;   // local vertex -> host vertex (-1 for the apex)
  std::vector<EdgeId> host_edge;       // local edge -> host edge (for apex edges: the contracted tree edge, or -1)
  std::vector<int> layer_of;           // local vertex -> host layer (-1 for the apex)
};

LayerGraph build_layer_graph(const LayeredMap& layered, int i, int j);

/// The same graph produced by literal map edits (vertex-induced layers
/// 0..j, edge deletions, then one contraction at a time). Quadratic; used
/// to cross-check build_layer_graph.
LayerGraph build_layer_graph_by_edits(const LayeredMap& layered, int i, int j);

/// Drops the leaves of apex edges and cleans up the tree. The result covers
/// local edges [0, window_edge_count); empty if there are none.
BranchDecomposition restrict_decomposition(const BranchDecomposition& bd, int window_edge_count);

}  // namespace surfcount
