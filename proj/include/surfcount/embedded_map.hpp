#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace surfcount {

using VertexId = int;
using EdgeId = int;

// A dart is one end of an edge: dart = 2 * edge + slot, where slot selects the
// endpoint written first (0) or second (1) on the edge record. The dart
// "lives" at the endpoint it selects and points towards the other endpoint.
using DartId = int;

constexpr DartId make_dart(EdgeId e, int slot) { return 2 * e + slot; }
constexpr EdgeId dart_edge(DartId d) { return d >> 1; }
constexpr int dart_slot(DartId d) { return d & 1; }
constexpr DartId reverse_dart(DartId d) { return d ^ 1; }

enum class EdgeOrigin : std::uint8_t { original, added };

/// A connected multigraph together with a rotation system: for every vertex
/// the clockwise cyclic order of the darts living there. Loops contribute two
/// darts to the same rotation. Immutable; edit operations return new maps.
class Map {
 public:
  /// Single vertex, no edges.
  Map();

  /// Validates that every dart occurs exactly once, in the rotation of the
  /// vertex it selects, and that the multigraph is connected. Throws
  /// InputError otherwise. `origin` defaults to all-original.
  Map(int vertex_count, std::vector<std::array<VertexId, 2>> edges,
      std::vector<std::vector<DartId>> rotation, std::vector<EdgeOrigin> origin = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(ends_.size()); }
  int dart_count() const { return 2 * edge_count(); }

  const std::array<VertexId, 2>& ends(EdgeId e) const { return ends_[e]; }
  EdgeOrigin origin(EdgeId e) const { return origin_[e]; }
  const std::vector<EdgeOrigin>& origins() const { return origin_; }

  VertexId tail(DartId d) const { return ends_[dart_edge(d)][dart_slot(d)]; }
  VertexId head(DartId d) const { return ends_[dart_edge(d)][1 - dart_slot(d)]; }

  std::span<const DartId> rotation(VertexId v) const {
    return {darts_.data() + offset_[v], darts_.data() + offset_[v + 1]};
  }
  int degree(VertexId v) const { return offset_[v + 1] - offset_[v]; }

  /// Clockwise successor / predecessor of `d` in the rotation at tail(d).
  DartId next_around(DartId d) const;
  DartId prev_around(DartId d) const;

  /// The face successor: rotation successor, at head(d), of the reversal of d.
  DartId face_successor(DartId d) const { return next_around(reverse_dart(d)); }

  /// Position of `d` within the rotation of tail(d).
  int position(DartId d) const { return position_[d]; }

  /// Lowest-index dart at v, or -1 for an isolated vertex.
  DartId first_dart(VertexId v) const;

  bool is_simple() const;

  std::vector<std::array<VertexId, 2>> edge_list() const { return ends_; }
  std::vector<std::vector<DartId>> rotation_lists() const;

 private:
  int vertex_count_ = 1;
  std::vector<std::array<VertexId, 2>> ends_;
  std::vector<EdgeOrigin> origin_;
  std::vector<int> offset_;
  std::vector<DartId> darts_;
  std::vector<int> position_;
};

/// Structural equality: same vertices, same edge records and origins, and
/// rotations equal as cyclic sequences.
bool same_embedding(const Map& a, const Map& b);

struct FacialWalk {
  std::vector<DartId> darts;
  std::size_t length() const { return darts.size(); }
};

struct FaceTrace {
  std::vector<FacialWalk> walks;
  std::vector<int> face_of_dart;
};

/// Partition of the darts into facial walks. Faces are numbered in the order
/// their lowest dart is met; each walk starts at its lowest dart.
FaceTrace trace_face_structure(const Map& map);
std::vector<FacialWalk> trace_faces(const Map& map);
int face_count(const Map& map);

/// Orientable genus from n - m + f = 2 - 2g.
int genus(const Map& map);

/// Eccentricity of r (maximum BFS distance).
int eccentricity(const Map& map, VertexId r);

struct DualMap {
  Map map;  // vertex i is face i of trace_face_structure(source); edge e crosses edge e
};

DualMap dual(const Map& map);

/// Vertex-face incidence graph. Original vertices keep their ids; face F of
/// the source becomes vertex source.vertex_count() + F. Radial edge i joins
/// tail(d) to the face of d for the source dart d = i.
struct RadialGraph {
  Map map;
  int original_count = 0;
  FaceTrace faces;                          // faces of the radial map
  std::vector<int> face_of_source_edge;     // source edge -> radial face
  std::vector<EdgeId> source_edge_of_face;  // radial face -> source edge

  bool is_original(VertexId v) const { return v < original_count; }
  DartId source_dart(EdgeId radial_edge) const { return radial_edge; }
};

RadialGraph radial(const Map& map);

/// Adds two parallel edges beside every edge, one on each side. Original
/// edges keep their ids; edge e gains companions m + 2e and m + 2e + 1,
/// marked EdgeOrigin::added.
Map triple_edges(const Map& map);

struct LayerStructure {
  VertexId root = 0;
  std::vector<std::vector<VertexId>> layers;
  std::vector<int> layer_of;
  std::vector<DartId> parent_dart;  // dart from the parent into v; -1 at the root

  int depth() const { return static_cast<int>(layers.size()) - 1; }
};

/// Breadth-first layering. Each vertex scans its rotation starting at its
/// lowest-index dart, so parents are deterministic.
LayerStructure bfs_layers(const Map& map, VertexId r);

/// Merges the endpoints of a non-loop edge; the lower vertex id survives and
/// higher ids shift down. Rotations are spliced at the removed darts.
Map contract_edge(const Map& map, EdgeId e);

/// Removes an edge (ids above shift down). Throws InputError if the result
/// is disconnected.
Map delete_edge(const Map& map, EdgeId e);

/// Replaces e = uv by u-x (keeping id e) and x-v (new id m); x = n.
Map subdivide_edge(const Map& map, EdgeId e);

/// Inverse of subdivide_edge: x must have degree 2 and no loop.
Map suppress_vertex(const Map& map, VertexId x);

}  // namespace surfcount
