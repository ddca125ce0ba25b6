#include "surfcount/ssd_builder.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_map>

#include "surfcount/errors.hpp"

namespace surfcount {

namespace {

// Result of deleting Steiner nodes of degree <= 1 (repeatedly) and
// suppressing Steiner nodes of degree 2 in a tree.
struct ReducedTree {
  std::vector<int> kept;                      // surviving nodes, increasing
  std::vector<int> degree;                    // per original node, after deletions
  std::vector<std::array<int, 2>> edges;      // between kept nodes (original ids)
  std::vector<std::array<int, 2>> first_hop;  // original tree edge leaving edges[k][0] along the chain
};

ReducedTree reduce_tree(const std::vector<std::vector<int>>& adjacency, const std::vector<char>& steiner,
                        std::vector<char> alive) {
  const int n = static_cast<int>(adjacency.size());
  ReducedTree out;
  out.degree.assign(n, 0);
  for (int x = 0; x < n; ++x)
    if (alive[x])
      for (int y : adjacency[x]) out.degree[x] += alive[y] ? 1 : 0;

  std::queue<int> queue;
  for (int x = 0; x < n; ++x)
    if (alive[x] && steiner[x] && out.degree[x] <= 1) queue.push(x);
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop();
    if (!alive[x] || out.degree[x] > 1) continue;
    alive[x] = 0;
    for (int y : adjacency[x]) {
      if (!alive[y]) continue;
      if (--out.degree[y] <= 1 && steiner[y]) queue.push(y);
    }
  }

  auto suppressed = [&](int x) { return alive[x] && steiner[x] && out.degree[x] == 2; };
  for (int x = 0; x < n; ++x)
    if (alive[x] && !suppressed(x)) out.kept.push_back(x);

  for (int a : out.kept) {
    for (int y : adjacency[a]) {
      if (!alive[y]) continue;
      int prev = a, cur = y;
      while (suppressed(cur)) {
        int next = -1;
        for (int z : adjacency[cur])
          if (alive[z] && z != prev) next = z;
        prev = cur;
        cur = next;
      }
      if (a < cur) {
        out.edges.push_back({a, cur});
        out.first_hop.push_back({a, y});
      }
    }
  }
  return out;
}

// Faces of the face tree reachable from `start` without crossing start-avoid.
std::vector<int> face_component(const std::vector<std::vector<std::array<int, 2>>>& tree, int start, int avoid) {
  std::vector<int> out{start};
  std::vector<int> from{avoid};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& [g, edge] : tree[out[k]]) {
      if (g == from[k]) continue;
      out.push_back(g);
      from.push_back(out[k]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BranchDecomposition trivial_decomposition(int edge_count) {
  if (edge_count == 0) return {};
  return BranchDecomposition({{TreeNodeKind::leaf, 0}}, {});
}

}  // namespace

FirstStage first_stage(const Map& tripled, VertexId r) {
  FirstStage out{radial(tripled), {}, {}, {}, {}};
  const Map& rmap = out.radial.map;
  const int re = rmap.edge_count();
  out.in_bfs_tree.assign(re, false);
  out.in_dual_tree.assign(re, false);

  const LayerStructure bfs = bfs_layers(rmap, r);
  for (VertexId w = 0; w < rmap.vertex_count(); ++w)
    if (bfs.parent_dart[w] >= 0) out.in_bfs_tree[dart_edge(bfs.parent_dart[w])] = true;

  const auto& faces = out.radial.faces;
  const int f = static_cast<int>(faces.walks.size());
  out.face_tree.assign(f, {});
  std::vector<char> visited(f, 0);
  std::queue<int> queue;
  visited[0] = 1;
  queue.push(0);
  int reached = 1;
  while (!queue.empty()) {
    const int face = queue.front();
    queue.pop();
    for (DartId d : faces.walks[face].darts) {
      const EdgeId e = dart_edge(d);
      if (out.in_bfs_tree[e]) continue;
      const int other = faces.face_of_dart[reverse_dart(d)];
      if (visited[other]) continue;
      visited[other] = 1;
      ++reached;
      out.in_dual_tree[e] = true;
      out.face_tree[face].push_back({other, e});
      out.face_tree[other].push_back({face, e});
      queue.push(other);
    }
  }
  SURFCOUNT_CHECK(reached == f, "face tree does not span the radial dual");

  for (EdgeId e = 0; e < re; ++e)
    if (!out.in_bfs_tree[e] && !out.in_dual_tree[e]) out.leftover.push_back(e);
  const int g = genus(tripled);
  SURFCOUNT_CHECK(static_cast<int>(out.leftover.size()) == 2 * g,
                  "leftover edge count " + std::to_string(out.leftover.size()) + " differs from 2g = " +
                      std::to_string(2 * g));
  return out;
}

BranchDecomposition second_stage(const FirstStage& first, const Map& tripled, SsdCertificate* certificate) {
  const auto& radial_graph = first.radial;
  const int f = static_cast<int>(first.face_tree.size());
  std::vector<std::vector<int>> adjacency(f);
  std::vector<char> steiner(f, 0);
  for (int face = 0; face < f; ++face) {
    for (const auto& [g, edge] : first.face_tree[face]) adjacency[face].push_back(g);
    const EdgeId e = radial_graph.source_edge_of_face[face];
    steiner[face] = tripled.origin(e) == EdgeOrigin::added ? 1 : 0;
    const int limit = steiner[face] ? 3 : 2;
    if (static_cast<int>(adjacency[face].size()) > limit)
      SURFCOUNT_CHECK(false, "face " + std::to_string(face) + " of edge " + std::to_string(e) + " has degree " +
                                 std::to_string(adjacency[face].size()) + " in the face tree (limit " +
                                 std::to_string(limit) + ")");
  }

  const ReducedTree reduced = reduce_tree(adjacency, steiner, std::vector<char>(f, 1));
  std::vector<int> node_of(f, -1);
  std::vector<BranchDecomposition::Node> nodes;
  std::vector<std::array<int, 2>> tree_edges;
  std::vector<int> pendant_host;  // kept face -> needs a pendant leaf
  for (int face : reduced.kept) {
    node_of[face] = static_cast<int>(nodes.size());
    if (steiner[face]) {
      nodes.push_back({TreeNodeKind::internal, -1});
      continue;
    }
    const EdgeId e = radial_graph.source_edge_of_face[face];
    const int deg = reduced.degree[face];
    SURFCOUNT_CHECK(deg <= 2, "original edge node of degree above 2");
    if (deg == 2) {
      nodes.push_back({TreeNodeKind::internal, -1});
      pendant_host.push_back(face);
    } else {
      nodes.push_back({TreeNodeKind::leaf, e});
    }
  }
  for (const auto& [a, b] : reduced.edges) tree_edges.push_back({node_of[a], node_of[b]});
  for (int face : pendant_host) {
    const int leaf = static_cast<int>(nodes.size());
    nodes.push_back({TreeNodeKind::leaf, radial_graph.source_edge_of_face[face]});
    tree_edges.push_back({leaf, node_of[face]});
  }

  if (certificate != nullptr) {
    certificate->face_of_host_edge.clear();
    for (EdgeId e = 0; e < tripled.edge_count(); ++e)
      if (tripled.origin(e) == EdgeOrigin::original)
        certificate->face_of_host_edge.push_back(radial_graph.face_of_source_edge[e]);
    certificate->sides.clear();
    auto complement = [&](const std::vector<int>& set) {
      std::vector<int> rest;
      std::size_t k = 0;
      for (int face = 0; face < f; ++face) {
        if (k < set.size() && set[k] == face) {
          ++k;
          continue;
        }
        rest.push_back(face);
      }
      return rest;
    };
    for (const auto& [a, y] : reduced.first_hop) {
      auto side = face_component(first.face_tree, a, y);
      auto rest = complement(side);
      certificate->sides.push_back({std::move(side), std::move(rest)});
    }
    for (int face : pendant_host) {
      std::vector<int> single{face};
      certificate->sides.push_back({single, complement(single)});
    }
  }
  return BranchDecomposition(std::move(nodes), std::move(tree_edges));
}

SsdResult construct_ssd(const Map& map, VertexId r) {
  SsdResult out;
  out.genus = genus(map);
  out.eccentricity = eccentricity(map, r);
  const int m = map.edge_count();
  if (m == 0) return out;
  out.tripled = triple_edges(map);
  if (m == 1) {
    out.radial = radial(out.tripled);
    out.bd = trivial_decomposition(1);
    out.certificate.face_of_host_edge = {out.radial.face_of_source_edge[0]};
  } else {
    FirstStage first = first_stage(out.tripled, r);
    out.leftover_edges = static_cast<int>(first.leftover.size());
    out.bd = second_stage(first, out.tripled, &out.certificate);
    out.radial = std::move(first.radial);
  }
  out.mids = compute_middle_sets(out.bd, map.vertex_count(), map.edge_list());
  return out;
}

BranchDecomposition build_ssd(const Map& map, VertexId r) {
  if (map.edge_count() <= 1) return trivial_decomposition(map.edge_count());
  const Map tripled = triple_edges(map);
  const FirstStage first = first_stage(tripled, r);
  return second_stage(first, tripled, nullptr);
}

LayeredMap prepare_layers(const Map& map, VertexId r) {
  LayeredMap out;
  out.map = &map;
  out.layers = bfs_layers(map, r);
  const auto& parent = out.layers.parent_dart;
  auto is_tree_dart = [&](DartId d) {
    return parent[map.head(d)] == d || parent[map.tail(d)] == reverse_dart(d);
  };
  auto next_tree_dart = [&](VertexId v, int from_position) {
    const auto rot = map.rotation(v);
    for (std::size_t k = 0; k < rot.size(); ++k) {
      const DartId d = rot[(from_position + k) % rot.size()];
      if (is_tree_dart(d)) return d;
    }
    return DartId{-1};
  };

  // Euler tour of the BFS tree; rank = order in which parent darts are met.
  std::vector<int> rank(map.vertex_count(), 0);
  const DartId start = map.degree(r) > 0 ? next_tree_dart(r, map.position(map.first_dart(r))) : -1;
  if (start >= 0) {
    int counter = 0;
    DartId d = start;
    do {
      if (parent[map.head(d)] == d) rank[map.head(d)] = counter++;
      const DartId back = reverse_dart(d);
      d = next_tree_dart(map.tail(back), map.position(back) + 1);
    } while (d != start);
  }
  out.tour_ordered = out.layers.layers;
  for (auto& layer : out.tour_ordered)
    std::sort(layer.begin(), layer.end(), [&](VertexId a, VertexId b) { return rank[a] < rank[b]; });
  return out;
}

LayerGraph build_layer_graph(const LayeredMap& layered, int i, int j) {
  const Map& map = *layered.map;
  const auto& layers = layered.layers;
  if (i < 0 || i > j || j > layers.depth()) throw InputError("layer window out of range");

  LayerGraph out;
  std::unordered_map<VertexId, VertexId> local;
  for (int x = i; x <= j; ++x)
    for (VertexId v : layered.tour_ordered[x]) {
      local.emplace(v, static_cast<VertexId>(out.host_vertex.size()));
      out.host_vertex.push_back(v);
      out.layer_of.push_back(x);
    }
  const int n_window = static_cast<int>(out.host_vertex.size());
  auto in_window = [&](VertexId v) { return layers.layer_of[v] >= i && layers.layer_of[v] <= j; };

  std::vector<std::array<VertexId, 2>> ends;
  std::unordered_map<EdgeId, EdgeId> local_edge;
  for (VertexId v : out.host_vertex)
    for (DartId d : map.rotation(v))
      if (dart_slot(d) == 0 && in_window(map.head(d))) {
        local_edge.emplace(dart_edge(d), static_cast<EdgeId>(ends.size()));
        ends.push_back({local.at(v), local.at(map.head(d))});
        out.host_edge.push_back(dart_edge(d));
      }
  out.window_edge_count = static_cast<int>(ends.size());

  out.apex = n_window;
  const auto& bottom = layered.tour_ordered[i];
  std::vector<std::vector<DartId>> rotation(n_window + 1);
  for (std::size_t k = 0; k < bottom.size(); ++k) {
    const EdgeId apex_edge = static_cast<EdgeId>(ends.size());
    ends.push_back({out.apex, local.at(bottom[k])});
    out.host_edge.push_back(i > 0 ? dart_edge(layers.parent_dart[bottom[k]]) : -1);
    rotation[out.apex].push_back(make_dart(apex_edge, 0));
  }
  for (VertexId lv = 0; lv < n_window; ++lv) {
    const VertexId v = out.host_vertex[lv];
    const bool bottom_layer = layers.layer_of[v] == i;
    const EdgeId apex_edge =
        bottom_layer ? out.window_edge_count + static_cast<EdgeId>(lv) : -1;  // layer i comes first locally
    if (bottom_layer && i == 0) rotation[lv].push_back(make_dart(apex_edge, 1));
    for (DartId d : map.rotation(v)) {
      if (in_window(map.head(d))) {
        rotation[lv].push_back(make_dart(local_edge.at(dart_edge(d)), dart_slot(d)));
      } else if (bottom_layer && i > 0 && d == reverse_dart(layers.parent_dart[v])) {
        rotation[lv].push_back(make_dart(apex_edge, 1));
      }
    }
  }
  out.layer_of.push_back(-1);
  out.host_vertex.push_back(-1);
  out.map = Map(n_window + 1, std::move(ends), std::move(rotation));
  return out;
}

LayerGraph build_layer_graph_by_edits(const LayeredMap& layered, int i, int j) {
  const Map& map = *layered.map;
  const auto& layers = layered.layers;
  if (i < 0 || i > j || j > layers.depth()) throw InputError("layer window out of range");

  // G[L_0 .. L_j].
  std::vector<VertexId> host_vertex;
  std::vector<VertexId> local(map.vertex_count(), -1);
  for (VertexId v = 0; v < map.vertex_count(); ++v)
    if (layers.layer_of[v] <= j) {
      local[v] = static_cast<VertexId>(host_vertex.size());
      host_vertex.push_back(v);
    }
  std::vector<EdgeId> host_edge;
  std::vector<EdgeId> local_edge(map.edge_count(), -1);
  std::vector<std::array<VertexId, 2>> ends;
  for (EdgeId e = 0; e < map.edge_count(); ++e) {
    const auto [u, v] = map.ends(e);
    if (local[u] < 0 || local[v] < 0) continue;
    local_edge[e] = static_cast<EdgeId>(ends.size());
    ends.push_back({local[u], local[v]});
    host_edge.push_back(e);
  }
  std::vector<std::vector<DartId>> rotation(host_vertex.size());
  for (std::size_t lv = 0; lv < host_vertex.size(); ++lv)
    for (DartId d : map.rotation(host_vertex[lv]))
      if (local_edge[dart_edge(d)] >= 0) rotation[lv].push_back(make_dart(local_edge[dart_edge(d)], dart_slot(d)));
  Map current(static_cast<int>(host_vertex.size()), ends, rotation);

  auto is_tree_edge = [&](EdgeId e) {
    for (VertexId w : map.ends(e))
      if (layers.parent_dart[w] >= 0 && dart_edge(layers.parent_dart[w]) == e) return true;
    return false;
  };
  auto low = [&](VertexId v) { return layers.layer_of[v] < i; };

  LayerGraph out;
  if (i == 0) {
    // Pendant apex at the root.
    auto edge_list = current.edge_list();
    auto rot = current.rotation_lists();
    const VertexId apex = current.vertex_count();
    const EdgeId e = current.edge_count();
    edge_list.push_back({apex, local[layers.root]});
    rot[local[layers.root]].insert(rot[local[layers.root]].begin(), make_dart(e, 1));
    rot.push_back({make_dart(e, 0)});
    host_edge.push_back(-1);
    host_vertex.push_back(-1);
    current = Map(apex + 1, std::move(edge_list), std::move(rot));
    out.apex = apex;
  } else {
    for (EdgeId le = current.edge_count() - 1; le >= 0; --le) {
      const EdgeId e = host_edge[le];
      const auto [u, v] = map.ends(e);
      if ((low(u) || low(v)) && !is_tree_edge(e)) {
        current = delete_edge(current, le);
        host_edge.erase(host_edge.begin() + le);
      }
    }
    for (;;) {
      EdgeId target = -1;
      for (EdgeId le = 0; le < current.edge_count() && target < 0; ++le) {
        const auto [a, b] = current.ends(le);
        const VertexId u = host_vertex[a], v = host_vertex[b];
        const bool a_low = u < 0 || low(u), b_low = v < 0 || low(v);
        if (a != b && a_low && b_low) target = le;
      }
      if (target < 0) break;
      const auto [a, b] = current.ends(target);
      current = contract_edge(current, target);
      host_edge.erase(host_edge.begin() + target);
      host_vertex[std::min(a, b)] = -1;
      host_vertex.erase(host_vertex.begin() + std::max(a, b));
    }
    out.apex = static_cast<VertexId>(std::find(host_vertex.begin(), host_vertex.end(),
                                               i == 1 ? layers.root : VertexId{-1}) -
                                     host_vertex.begin());
    if (i == 1) host_vertex[out.apex] = -1;
  }
  out.host_vertex = host_vertex;
  out.host_edge = host_edge;
  out.layer_of.resize(host_vertex.size());
  for (std::size_t lv = 0; lv < host_vertex.size(); ++lv)
    out.layer_of[lv] = host_vertex[lv] < 0 ? -1 : layers.layer_of[host_vertex[lv]];
  out.window_edge_count = 0;
  for (EdgeId le = 0; le < current.edge_count(); ++le) {
    const auto [a, b] = current.ends(le);
    if (a != out.apex && b != out.apex) ++out.window_edge_count;
  }
  out.map = std::move(current);
  return out;
}

BranchDecomposition restrict_decomposition(const BranchDecomposition& bd, int window_edge_count) {
  const int n = bd.node_count();
  if (n == 0) return {};
  std::vector<std::vector<int>> adjacency(n);
  std::vector<char> steiner(n, 0), alive(n, 1);
  for (int x = 0; x < n; ++x) {
    for (int t : bd.incident(x)) adjacency[x].push_back(bd.other_end(t, x));
    const auto& node = bd.node(x);
    if (node.kind != TreeNodeKind::leaf) {
      steiner[x] = 1;
    } else if (node.edge >= window_edge_count) {
      alive[x] = 0;
    }
  }
  const ReducedTree reduced = reduce_tree(adjacency, steiner, alive);
  if (reduced.kept.empty()) return {};
  std::vector<int> node_of(n, -1);
  std::vector<BranchDecomposition::Node> nodes;
  for (int x : reduced.kept) {
    node_of[x] = static_cast<int>(nodes.size());
    nodes.push_back(bd.node(x));
  }
  std::vector<std::array<int, 2>> edges;
  for (const auto& [a, b] : reduced.edges) edges.push_back({node_of[a], node_of[b]});
  return BranchDecomposition(std::move(nodes), std::move(edges));
}

}  // namespace surfcount
