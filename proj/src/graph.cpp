#include "surfcount/graph.hpp"

#include <algorithm>
#include <string>

#include "surfcount/errors.hpp"

namespace surfcount {

SimpleGraph::SimpleGraph(int vertex_count) : adjacency_(vertex_count) {}

SimpleGraph::SimpleGraph(int vertex_count, const std::vector<std::array<VertexId, 2>>& edges)
    : adjacency_(vertex_count) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

EdgeId SimpleGraph::add_edge(VertexId u, VertexId v) {
  const int n = vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " has an endpoint out of range");
  if (u == v) throw InputError("loop at vertex " + std::to_string(u) + " in a simple graph");
  if (adjacent(u, v))
    throw InputError("parallel edge " + std::to_string(u) + "-" + std::to_string(v) + " in a simple graph");
  const EdgeId e = edge_count();
  edges_.push_back({u, v});
  auto insert = [&](VertexId a, VertexId b) {
    auto& list = adjacency_[a];
    const Incidence inc{b, e};
    list.insert(std::upper_bound(list.begin(), list.end(), inc), inc);
  };
  insert(u, v);
  insert(v, u);
  return e;
}

int SimpleGraph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

EdgeId SimpleGraph::edge_between(VertexId u, VertexId v) const {
  const auto& list = adjacency_[u];
  const auto it = std::lower_bound(list.begin(), list.end(), Incidence{v, -1});
  return (it != list.end() && it->neighbor == v) ? it->edge : -1;
}

SimpleGraph underlying_graph(const Map& map) {
  if (!map.is_simple()) throw InputError("host map must be simple (no loops or parallel edges)");
  return SimpleGraph(map.vertex_count(), map.edge_list());
}

std::vector<std::vector<VertexId>> connected_components(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (const auto& inc : g.incident(v))
        if (comp[inc.neighbor] < 0) {
          comp[inc.neighbor] = id;
          stack.push_back(inc.neighbor);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const VertexId> vertices) {
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  SimpleGraph out(static_cast<int>(vertices.size()));
  for (const auto& [u, v] : g.edges())
    if (local[u] >= 0 && local[v] >= 0) out.add_edge(local[u], local[v]);
  return out;
}

SimpleGraph edge_subgraph(const SimpleGraph& g, const std::vector<bool>& keep) {
  SimpleGraph out(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (keep[e]) out.add_edge(g.edge(e)[0], g.edge(e)[1]);
  return out;
}

}  // namespace surfcount
