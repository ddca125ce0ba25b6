#include "surfcount/embedded_map.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "surfcount/errors.hpp"

namespace surfcount {

namespace {

std::vector<DartId> rotated_to_min(std::span<const DartId> rot) {
  std::vector<DartId> out(rot.begin(), rot.end());
  if (!out.empty()) std::rotate(out.begin(), std::min_element(out.begin(), out.end()), out.end());
  return out;
}

// Rebuilds a map after dropping one vertex and/or one edge. Darts of the
// dropped edge must already be absent from `rotation`.
Map renumber(int vertex_count, const std::vector<std::array<VertexId, 2>>& ends,
             const std::vector<std::vector<DartId>>& rotation, const std::vector<EdgeOrigin>& origin,
             VertexId dropped_vertex, EdgeId dropped_edge) {
  auto new_vertex = [&](VertexId v) { return (dropped_vertex >= 0 && v > dropped_vertex) ? v - 1 : v; };
  auto new_edge = [&](EdgeId e) { return (dropped_edge >= 0 && e > dropped_edge) ? e - 1 : e; };

  std::vector<std::array<VertexId, 2>> out_ends;
  std::vector<EdgeOrigin> out_origin;
  for (EdgeId e = 0; e < static_cast<EdgeId>(ends.size()); ++e) {
    if (e == dropped_edge) continue;
    out_ends.push_back({new_vertex(ends[e][0]), new_vertex(ends[e][1])});
    out_origin.push_back(origin[e]);
  }
  std::vector<std::vector<DartId>> out_rot;
  for (VertexId v = 0; v < vertex_count; ++v) {
    if (v == dropped_vertex) continue;
    std::vector<DartId> r;
    r.reserve(rotation[v].size());
    for (DartId d : rotation[v]) r.push_back(make_dart(new_edge(dart_edge(d)), dart_slot(d)));
    out_rot.push_back(std::move(r));
  }
  const int n = vertex_count - (dropped_vertex >= 0 ? 1 : 0);
  return Map(n, std::move(out_ends), std::move(out_rot), std::move(out_origin));
}

}  // namespace

Map::Map() : offset_{0, 0} {}

Map::Map(int vertex_count, std::vector<std::array<VertexId, 2>> edges,
         std::vector<std::vector<DartId>> rotation, std::vector<EdgeOrigin> origin)
    : vertex_count_(vertex_count), ends_(std::move(edges)), origin_(std::move(origin)) {
  if (vertex_count_ < 1) throw InputError("a map needs at least one vertex");
  const int m = edge_count();
  if (origin_.empty()) origin_.assign(m, EdgeOrigin::original);
  if (static_cast<int>(origin_.size()) != m) throw InputError("edge origin list has the wrong length");
  if (static_cast<int>(rotation.size()) != vertex_count_)
    throw InputError("rotation system must list every vertex");
  for (EdgeId e = 0; e < m; ++e)
    for (VertexId v : ends_[e])
      if (v < 0 || v >= vertex_count_)
        throw InputError("edge " + std::to_string(e) + " has an endpoint out of range");

  offset_.assign(vertex_count_ + 1, 0);
  position_.assign(2 * m, -1);
  darts_.reserve(2 * m);
  for (VertexId v = 0; v < vertex_count_; ++v) {
    offset_[v] = static_cast<int>(darts_.size());
    int pos = 0;
    for (DartId d : rotation[v]) {
      if (d < 0 || d >= 2 * m) throw InputError("dart " + std::to_string(d) + " out of range");
      if (position_[d] >= 0)
        throw InputError("duplicate dart " + std::to_string(dart_edge(d)) + "." + std::to_string(dart_slot(d)));
      if (tail(d) != v)
        throw InputError("dart " + std::to_string(dart_edge(d)) + "." + std::to_string(dart_slot(d)) +
                         " listed at vertex " + std::to_string(v) + " but selects vertex " +
                         std::to_string(tail(d)));
      position_[d] = pos++;
      darts_.push_back(d);
    }
  }
  offset_[vertex_count_] = static_cast<int>(darts_.size());
  for (DartId d = 0; d < 2 * m; ++d)
    if (position_[d] < 0)
      throw InputError("missing dart " + std::to_string(dart_edge(d)) + "." + std::to_string(dart_slot(d)));

  // Connectivity.
  std::vector<int> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = vertex_count_;
  for (const auto& [u, v] : ends_) {
    const int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components != 1) throw InputError("graph is disconnected");
}

DartId Map::next_around(DartId d) const {
  const VertexId v = tail(d);
  const int deg = degree(v);
  return darts_[offset_[v] + (position_[d] + 1) % deg];
}

DartId Map::prev_around(DartId d) const {
  const VertexId v = tail(d);
  const int deg = degree(v);
  return darts_[offset_[v] + (position_[d] + deg - 1) % deg];
}

DartId Map::first_dart(VertexId v) const {
  const auto rot = rotation(v);
  if (rot.empty()) return -1;
  return *std::min_element(rot.begin(), rot.end());
}

bool Map::is_simple() const {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(ends_.size());
  for (const auto& [u, v] : ends_) {
    if (u == v) return false;
    pairs.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

std::vector<std::vector<DartId>> Map::rotation_lists() const {
  std::vector<std::vector<DartId>> out(vertex_count_);
  for (VertexId v = 0; v < vertex_count_; ++v) {
    const auto rot = rotation(v);
    out[v].assign(rot.begin(), rot.end());
  }
  return out;
}

bool same_embedding(const Map& a, const Map& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (a.edge_list() != b.edge_list() || a.origins() != b.origins()) return false;
  for (VertexId v = 0; v < a.vertex_count(); ++v)
    if (rotated_to_min(a.rotation(v)) != rotated_to_min(b.rotation(v))) return false;
  return true;
}

FaceTrace trace_face_structure(const Map& map) {
  FaceTrace out;
  const int darts = map.dart_count();
  out.face_of_dart.assign(darts, -1);
  if (darts == 0) {
    out.walks.emplace_back();
    return out;
  }
  for (DartId start = 0; start < darts; ++start) {
    if (out.face_of_dart[start] >= 0) continue;
    const int face = static_cast<int>(out.walks.size());
    FacialWalk walk;
    DartId d = start;
    do {
      out.face_of_dart[d] = face;
      walk.darts.push_back(d);
      d = map.face_successor(d);
    } while (d != start);
    out.walks.push_back(std::move(walk));
  }
  return out;
}

std::vector<FacialWalk> trace_faces(const Map& map) { return trace_face_structure(map).walks; }

int face_count(const Map& map) { return static_cast<int>(trace_face_structure(map).walks.size()); }

int genus(const Map& map) {
  const int twice = 2 - map.vertex_count() + map.edge_count() - face_count(map);
  if (twice < 0 || twice % 2 != 0) throw InputError("invalid rotation system");
  return twice / 2;
}

int eccentricity(const Map& map, VertexId r) {
  const auto layers = bfs_layers(map, r);
  return layers.depth();
}

DualMap dual(const Map& map) {
  const FaceTrace faces = trace_face_structure(map);
  const int f = static_cast<int>(faces.walks.size());
  std::vector<std::array<VertexId, 2>> ends(map.edge_count());
  for (EdgeId e = 0; e < map.edge_count(); ++e)
    ends[e] = {faces.face_of_dart[make_dart(e, 0)], faces.face_of_dart[make_dart(e, 1)]};
  // The dual dart d sits at the face containing the primal dart d; the walk
  // runs counter-clockwise around its face, so the clockwise rotation is the
  // reversed walk.
  std::vector<std::vector<DartId>> rotation(f);
  for (int face = 0; face < f; ++face) {
    const auto& walk = faces.walks[face].darts;
    rotation[face].assign(walk.rbegin(), walk.rend());
  }
  return DualMap{Map(f, std::move(ends), std::move(rotation))};
}

RadialGraph radial(const Map& map) {
  if (map.edge_count() == 0) throw InputError("radial graph needs at least one edge");
  const FaceTrace source_faces = trace_face_structure(map);
  const int n = map.vertex_count();
  const int f = static_cast<int>(source_faces.walks.size());
  const int darts = map.dart_count();

  std::vector<std::array<VertexId, 2>> ends(darts);
  for (DartId d = 0; d < darts; ++d) ends[d] = {map.tail(d), n + source_faces.face_of_dart[d]};

  std::vector<std::vector<DartId>> rotation(n + f);
  for (VertexId v = 0; v < n; ++v)
    for (DartId d : map.rotation(v)) rotation[v].push_back(make_dart(d, 0));
  for (int face = 0; face < f; ++face) {
    const auto& walk = source_faces.walks[face].darts;
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) rotation[n + face].push_back(make_dart(*it, 1));
  }

  RadialGraph out{Map(n + f, std::move(ends), std::move(rotation)), n, {}, {}, {}};
  out.faces = trace_face_structure(out.map);

  // The source edge with dart d at u lies in the corner between radial edges
  // d and next_around(d) at u.
  const int m = map.edge_count();
  out.face_of_source_edge.assign(m, -1);
  out.source_edge_of_face.assign(out.faces.walks.size(), -1);
  for (EdgeId e = 0; e < m; ++e) {
    const int a = out.faces.face_of_dart[make_dart(map.next_around(make_dart(e, 0)), 0)];
    const int b = out.faces.face_of_dart[make_dart(map.next_around(make_dart(e, 1)), 0)];
    SURFCOUNT_CHECK(a == b, "radial face of an edge is ambiguous");
    SURFCOUNT_CHECK(out.source_edge_of_face[a] < 0, "two edges claim the same radial face");
    out.face_of_source_edge[e] = a;
    out.source_edge_of_face[a] = e;
  }
  SURFCOUNT_CHECK(static_cast<int>(out.faces.walks.size()) == m, "radial face count differs from edge count");
  return out;
}

Map triple_edges(const Map& map) {
  const int m = map.edge_count();
  std::vector<std::array<VertexId, 2>> ends = map.edge_list();
  std::vector<EdgeOrigin> origin = map.origins();
  ends.resize(3 * m);
  origin.resize(3 * m, EdgeOrigin::added);
  for (EdgeId e = 0; e < m; ++e) ends[m + 2 * e] = ends[m + 2 * e + 1] = ends[e];

  std::vector<std::vector<DartId>> rotation(map.vertex_count());
  for (VertexId v = 0; v < map.vertex_count(); ++v) {
    for (DartId d : map.rotation(v)) {
      const EdgeId e = dart_edge(d);
      const EdgeId before = m + 2 * e, after = m + 2 * e + 1;
      // Seen from the other endpoint the two sides swap.
      if (dart_slot(d) == 0) {
        rotation[v].insert(rotation[v].end(), {make_dart(before, 0), d, make_dart(after, 0)});
      } else {
        rotation[v].insert(rotation[v].end(), {make_dart(after, 1), d, make_dart(before, 1)});
      }
    }
  }
  return Map(map.vertex_count(), std::move(ends), std::move(rotation), std::move(origin));
}

LayerStructure bfs_layers(const Map& map, VertexId r) {
  if (r < 0 || r >= map.vertex_count()) throw InputError("root vertex out of range");
  LayerStructure out;
  out.root = r;
  out.layer_of.assign(map.vertex_count(), -1);
  out.parent_dart.assign(map.vertex_count(), -1);
  out.layer_of[r] = 0;
  out.layers.push_back({r});
  std::queue<VertexId> queue;
  queue.push(r);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    const auto rot = map.rotation(v);
    if (rot.empty()) continue;
    const int start = map.position(map.first_dart(v));
    for (std::size_t k = 0; k < rot.size(); ++k) {
      const DartId d = rot[(start + k) % rot.size()];
      const VertexId w = map.head(d);
      if (out.layer_of[w] >= 0) continue;
      const int layer = out.layer_of[v] + 1;
      out.layer_of[w] = layer;
      out.parent_dart[w] = d;
      if (static_cast<int>(out.layers.size()) <= layer) out.layers.emplace_back();
      out.layers[layer].push_back(w);
      queue.push(w);
    }
  }
  return out;
}

Map contract_edge(const Map& map, EdgeId e) {
  const auto [u, v] = map.ends(e);
  if (u == v) throw InputError("cannot contract a loop");
  const VertexId keep = std::min(u, v), gone = std::max(u, v);

  auto rotation = map.rotation_lists();
  auto after = [&](VertexId x, DartId d) {
    const auto rot = map.rotation(x);
    std::vector<DartId> out;
    const int p = map.position(d);
    for (std::size_t k = 1; k < rot.size(); ++k) out.push_back(rot[(p + k) % rot.size()]);
    return out;
  };
  std::vector<DartId> merged = after(u, make_dart(e, 0));
  const auto tail_part = after(v, make_dart(e, 1));
  merged.insert(merged.end(), tail_part.begin(), tail_part.end());
  rotation[keep] = std::move(merged);
  rotation[gone].clear();

  auto ends = map.edge_list();
  for (auto& end : ends)
    for (VertexId& x : end)
      if (x == gone) x = keep;
  return renumber(map.vertex_count(), ends, rotation, map.origins(), gone, e);
}

Map delete_edge(const Map& map, EdgeId e) {
  auto rotation = map.rotation_lists();
  for (int slot = 0; slot < 2; ++slot) {
    auto& rot = rotation[map.ends(e)[slot]];
    rot.erase(std::remove(rot.begin(), rot.end(), make_dart(e, slot)), rot.end());
  }
  return renumber(map.vertex_count(), map.edge_list(), rotation, map.origins(), -1, e);
}

Map subdivide_edge(const Map& map, EdgeId e) {
  const int n = map.vertex_count(), m = map.edge_count();
  const VertexId v = map.ends(e)[1];
  auto ends = map.edge_list();
  auto origin = map.origins();
  ends[e][1] = n;
  ends.push_back({n, v});
  origin.push_back(origin[e]);
  auto rotation = map.rotation_lists();
  std::replace(rotation[v].begin(), rotation[v].end(), make_dart(e, 1), make_dart(m, 1));
  rotation.push_back({make_dart(e, 1), make_dart(m, 0)});
  return Map(n + 1, std::move(ends), std::move(rotation), std::move(origin));
}

Map suppress_vertex(const Map& map, VertexId x) {
  if (x < 0 || x >= map.vertex_count()) throw InputError("vertex out of range");
  if (map.degree(x) != 2) throw InputError("only a vertex of degree 2 can be suppressed");
  const auto rot = map.rotation(x);
  if (dart_edge(rot[0]) == dart_edge(rot[1])) throw InputError("cannot suppress a vertex carrying a loop");
  const DartId keep_dart = dart_edge(rot[0]) < dart_edge(rot[1]) ? rot[0] : rot[1];
  const DartId drop_dart = keep_dart == rot[0] ? rot[1] : rot[0];
  const EdgeId drop = dart_edge(drop_dart);
  const VertexId far = map.head(drop_dart);

  auto ends = map.edge_list();
  ends[dart_edge(keep_dart)][dart_slot(keep_dart)] = far;
  auto rotation = map.rotation_lists();
  rotation[x].clear();
  std::replace(rotation[far].begin(), rotation[far].end(), reverse_dart(drop_dart), keep_dart);
  return renumber(map.vertex_count(), ends, rotation, map.origins(), x, drop);
}

}  // namespace surfcount
