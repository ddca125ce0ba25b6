#include "surfcount/branch_decomposition.hpp"

#include <algorithm>
#include <string>

#include "surfcount/errors.hpp"

namespace surfcount {

BranchDecomposition::BranchDecomposition(std::vector<Node> nodes, std::vector<std::array<int, 2>> tree_edges)
    : nodes_(std::move(nodes)), tree_edges_(std::move(tree_edges)), incident_(nodes_.size()) {
  for (int t = 0; t < tree_edge_count(); ++t) {
    for (int x : tree_edges_[t]) {
      if (x < 0 || x >= node_count()) throw InputError("tree edge " + std::to_string(t) + " references a missing node");
      incident_[x].push_back(t);
    }
  }
  for (int x = 0; x < node_count(); ++x) {
    if (nodes_[x].kind != TreeNodeKind::root) continue;
    if (root_ >= 0) throw InputError("decomposition has more than one root");
    root_ = x;
  }
}

int BranchDecomposition::leaf_count() const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(),
                                        [](const Node& n) { return n.kind == TreeNodeKind::leaf; }));
}

void BranchDecomposition::validate(int host_edge_count) const {
  if (nodes_.empty()) {
    if (host_edge_count != 0) throw InputError("empty decomposition for a host with edges");
    return;
  }
  if (tree_edge_count() != node_count() - 1) throw InputError("decomposition is not a tree");
  // Connectivity (with n - 1 edges this also rules out cycles).
  std::vector<bool> seen(node_count(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 0;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    ++reached;
    for (int t : incident_[x]) {
      const int y = other_end(t, x);
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  if (reached != node_count()) throw InputError("decomposition is not a tree");

  std::vector<int> carried(host_edge_count, 0);
  for (int x = 0; x < node_count(); ++x) {
    const int deg = static_cast<int>(incident_[x].size());
    switch (nodes_[x].kind) {
      case TreeNodeKind::leaf:
        if (deg != 1 && !(degenerate() && deg == 0))
          throw InputError("leaf node " + std::to_string(x) + " has degree " + std::to_string(deg));
        if (nodes_[x].edge < 0 || nodes_[x].edge >= host_edge_count)
          throw InputError("leaf node " + std::to_string(x) + " carries no valid host edge");
        ++carried[nodes_[x].edge];
        break;
      case TreeNodeKind::root:
        if (deg != 1) throw InputError("root node must be a leaf");
        break;
      case TreeNodeKind::internal:
        if (deg != 3) throw InputError("internal node " + std::to_string(x) + " has degree " + std::to_string(deg));
        break;
    }
  }
  for (EdgeId e = 0; e < host_edge_count; ++e)
    if (carried[e] != 1)
      throw InputError("host edge " + std::to_string(e) + " is carried by " + std::to_string(carried[e]) +
                       " leaves");
}

BranchDecomposition root(const BranchDecomposition& bd) {
  if (bd.is_rooted()) throw InputError("decomposition is already rooted");
  if (bd.tree_edge_count() == 0) return bd;
  std::vector<BranchDecomposition::Node> nodes;
  for (int x = 0; x < bd.node_count(); ++x) nodes.push_back(bd.node(x));
  auto edges = bd.tree_edges();
  const int x = bd.node_count(), r = x + 1;
  nodes.push_back({TreeNodeKind::internal, -1});
  nodes.push_back({TreeNodeKind::root, -1});
  const int b = edges[0][1];
  edges[0][1] = x;
  edges.push_back({x, b});
  edges.push_back({r, x});
  return BranchDecomposition(std::move(nodes), std::move(edges));
}

RootedView rooted_view(const BranchDecomposition& bd) {
  if (!bd.is_rooted()) throw InputError("decomposition is not rooted");
  RootedView view;
  const int te = bd.tree_edge_count();
  view.lower_node.assign(te, -1);
  view.children.assign(te, {-1, -1});
  const int r = bd.root_node();
  view.root_edge = bd.incident(r)[0];

  // Pre-order over tree edges, then reversed for post-order.
  std::vector<int> order;
  order.reserve(te);
  std::vector<std::pair<int, int>> stack{{view.root_edge, r}};
  while (!stack.empty()) {
    const auto [t, from] = stack.back();
    stack.pop_back();
    const int lower = bd.other_end(t, from);
    view.lower_node[t] = lower;
    order.push_back(t);
    int c = 0;
    for (int s : bd.incident(lower)) {
      if (s == t) continue;
      SURFCOUNT_CHECK(c < 2, "node with more than two children");
      view.children[t][c++] = s;
      stack.emplace_back(s, lower);
    }
    SURFCOUNT_CHECK(c == 0 || c == 2, "node with exactly one child");
  }
  view.post_order.assign(order.rbegin(), order.rend());
  return view;
}

MiddleSetAnnotation compute_middle_sets(const BranchDecomposition& bd, int host_vertex_count,
                                        const std::vector<std::array<VertexId, 2>>& host_edges) {
  bd.validate(static_cast<int>(host_edges.size()));
  MiddleSetAnnotation out;
  const int te = bd.tree_edge_count();
  out.mid.assign(te, {});
  if (te == 0) return out;

  std::vector<int> degree(host_vertex_count, 0);
  for (const auto& [u, v] : host_edges) {
    ++degree[u];
    ++degree[v];
  }

  // Hang the tree from the root (or node 0) and record each node's parent edge.
  const int hang = bd.is_rooted() ? bd.root_node() : 0;
  std::vector<int> parent_edge(bd.node_count(), -1);
  std::vector<int> order{hang};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int x = order[i];
    for (int t : bd.incident(x)) {
      if (t == parent_edge[x]) continue;
      const int y = bd.other_end(t, x);
      parent_edge[y] = t;
      order.push_back(y);
    }
  }

  // For the edge above each node: (vertex, number of its edge ends below),
  // kept only for vertices that also have edges above.
  using Counts = std::vector<std::pair<VertexId, int>>;
  std::vector<Counts> below(te);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int x = *it;
    const int up = parent_edge[x];
    if (up < 0) continue;
    Counts merged;
    const auto& node = bd.node(x);
    if (node.kind == TreeNodeKind::leaf) {
      const auto [u, v] = host_edges[node.edge];
      if (u == v) {
        merged.emplace_back(u, 2);
      } else {
        merged.emplace_back(std::min(u, v), 1);
        merged.emplace_back(std::max(u, v), 1);
      }
    } else {
      for (int t : bd.incident(x)) {
        if (t == up) continue;
        Counts next;
        next.reserve(merged.size() + below[t].size());
        std::size_t a = 0, b = 0;
        const Counts& other = below[t];
        while (a < merged.size() || b < other.size()) {
          if (b == other.size() || (a < merged.size() && merged[a].first < other[b].first)) {
            next.push_back(merged[a++]);
          } else if (a == merged.size() || other[b].first < merged[a].first) {
            next.push_back(other[b++]);
          } else {
            next.emplace_back(merged[a].first, merged[a].second + other[b].second);
            ++a;
            ++b;
          }
        }
        merged = std::move(next);
        Counts().swap(below[t]);
      }
    }
    std::erase_if(merged, [&](const auto& p) { return p.second >= degree[p.first]; });
    auto& mid = out.mid[up];
    mid.reserve(merged.size());
    for (const auto& p : merged) mid.push_back(p.first);
    out.width = std::max(out.width, static_cast<int>(mid.size()));
    below[up] = std::move(merged);
  }
  return out;
}

bool verify_certificate(const BranchDecomposition& bd, const SsdCertificate& cert, const RadialGraph& radial) {
  const int te = bd.tree_edge_count();
  if (static_cast<int>(cert.sides.size()) != te) throw InputError("certificate is missing tree edge entries");
  const int faces = static_cast<int>(radial.faces.walks.size());
  for (int x = 0; x < bd.node_count(); ++x) {
    const auto& node = bd.node(x);
    if (node.kind == TreeNodeKind::leaf &&
        (node.edge < 0 || node.edge >= static_cast<int>(cert.face_of_host_edge.size())))
      throw InputError("certificate is missing a host edge entry");
  }

  std::vector<std::vector<int>> face_adjacency(faces);
  for (EdgeId e = 0; e < radial.map.edge_count(); ++e) {
    const int a = radial.faces.face_of_dart[make_dart(e, 0)];
    const int b = radial.faces.face_of_dart[make_dart(e, 1)];
    face_adjacency[a].push_back(b);
    face_adjacency[b].push_back(a);
  }

  std::vector<int> side_of(faces);
  std::vector<int> seen(faces);
  std::vector<int> node_side(bd.node_count());
  for (int t = 0; t < te; ++t) {
    std::fill(side_of.begin(), side_of.end(), -1);
    for (int s = 0; s < 2; ++s) {
      for (int f : cert.sides[t][s]) {
        if (f < 0 || f >= faces || side_of[f] >= 0) return false;
        side_of[f] = s;
      }
    }
    if (std::count(side_of.begin(), side_of.end(), -1) != 0) return false;

    // Each side connected in the dual of the radial graph.
    for (int s = 0; s < 2; ++s) {
      const auto& set = cert.sides[t][s];
      if (set.empty()) return false;
      std::fill(seen.begin(), seen.end(), 0);
      std::vector<int> stack{set.front()};
      seen[set.front()] = 1;
      std::size_t reached = 0;
      while (!stack.empty()) {
        const int f = stack.back();
        stack.pop_back();
        ++reached;
        for (int g : face_adjacency[f])
          if (!seen[g] && side_of[g] == s) {
            seen[g] = 1;
            stack.push_back(g);
          }
      }
      if (reached != set.size()) return false;
    }

    // Host edges carried on each side of the tree edge.
    std::fill(node_side.begin(), node_side.end(), -1);
    for (int s = 0; s < 2; ++s) {
      std::vector<int> stack{bd.tree_edge(t)[s]};
      node_side[stack.back()] = s;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        const auto& node = bd.node(x);
        if (node.kind == TreeNodeKind::leaf && side_of[cert.face_of_host_edge[node.edge]] != s) return false;
        for (int u : bd.incident(x)) {
          if (u == t) continue;
          const int y = bd.other_end(u, x);
          if (node_side[y] < 0) {
            node_side[y] = s;
            stack.push_back(y);
          }
        }
      }
    }
  }
  return true;
}

}  // namespace surfcount
