#include "surfcount/oracle.hpp"

#include <algorithm>
#include <set>

#include "surfcount/errors.hpp"
#include "surfcount/isomorphism.hpp"

namespace surfcount {

namespace {

// Calls f(image) for every injective map P -> G (edge-preserving; also
// non-edge-preserving when induced). Pattern vertices are placed in an
// order where each has an earlier neighbour when possible.
template <typename F>
void for_each_embedding(const SimpleGraph& g, const SimpleGraph& p, bool induced, F&& f) {
  const int k = p.vertex_count(), n = g.vertex_count();
  if (k > n) return;
  std::vector<int> order;
  std::vector<bool> placed(k, false);
  while (static_cast<int>(order.size()) < k) {
    int best = -1, best_links = -1;
    for (int v = 0; v < k; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (const auto& inc : p.incident(v)) links += placed[inc.neighbor] ? 1 : 0;
      if (links > best_links || (links == best_links && p.degree(v) > p.degree(best))) {
        best = v;
        best_links = links;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  std::vector<VertexId> image(k, -1);
  std::vector<bool> used(n, false);
  auto search = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      f(image);
      return;
    }
    const int v = order[depth];
    for (VertexId x = 0; x < n; ++x) {
      if (used[x] || g.degree(x) < p.degree(v)) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int u = order[d];
        const bool pe = p.adjacent(u, v);
        const bool ge = g.adjacent(image[u], x);
        ok = induced ? pe == ge : (!pe || ge);
      }
      if (!ok) continue;
      used[x] = true;
      image[v] = x;
      self(self, depth + 1);
      used[x] = false;
    }
    image[v] = -1;
  };
  search(search, 0);
}

Subgraph image_subgraph(const SimpleGraph& g, const SimpleGraph& p, const std::vector<VertexId>& image) {
  Subgraph s;
  s.vertices = image;
  std::sort(s.vertices.begin(), s.vertices.end());
  for (const auto& [u, v] : p.edges()) s.edges.push_back(g.edge_between(image[u], image[v]));
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

}  // namespace

Count count_embeddings(const SimpleGraph& g, const SimpleGraph& p, bool induced) {
  Count total = 0;
  for_each_embedding(g, p, induced, [&](const std::vector<VertexId>&) { ++total; });
  return total;
}

Count brute_count(const SimpleGraph& g, const SimpleGraph& p, bool induced) {
  const Count maps = count_embeddings(g, p, induced);
  const Count aut = automorphism_count(p);
  SURFCOUNT_CHECK(maps % aut == 0, "embedding count is not divisible by the automorphism count");
  return maps / aut;
}

std::vector<Subgraph> brute_list(const SimpleGraph& g, const SimpleGraph& p, bool induced) {
  std::set<Subgraph> seen;
  for_each_embedding(g, p, induced,
                     [&](const std::vector<VertexId>& image) { seen.insert(image_subgraph(g, p, image)); });
  return {seen.begin(), seen.end()};
}

Count brute_count_exhaustive(const SimpleGraph& g, const SimpleGraph& p, bool induced) {
  const int n = g.vertex_count(), k = p.vertex_count();
  if (n > 20) throw InputError("exhaustive oracle is limited to 20 host vertices");
  if (k > n) return 0;
  Count total = 0;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    if (__builtin_popcount(set) != k) continue;
    std::vector<VertexId> vertices;
    for (int v = 0; v < n; ++v)
      if ((set >> v) & 1u) vertices.push_back(v);
    const SimpleGraph sub = induced_subgraph(g, vertices);
    if (induced) {
      if (isomorphic(sub, p)) ++total;
      continue;
    }
    const int m = sub.edge_count();
    if (m > 30) throw InputError("exhaustive oracle is limited to 30 edges per vertex subset");
    for (std::uint64_t keep = 0; keep < (std::uint64_t{1} << m); ++keep) {
      if (__builtin_popcountll(keep) != p.edge_count()) continue;
      std::vector<bool> flags(m);
      for (int e = 0; e < m; ++e) flags[e] = (keep >> e) & 1u;
      if (isomorphic(edge_subgraph(sub, flags), p)) ++total;
    }
  }
  return total;
}

Count brute_colorful_count(const SimpleGraph& g, const Coloring& coloring, const SimpleGraph& p, bool induced) {
  Count total = 0;
  for (const Subgraph& s : brute_list(g, p, induced)) {
    std::vector<bool> hit(coloring.q + 1, false);
    for (VertexId v : s.vertices) hit[coloring.color[v]] = true;
    if (std::all_of(hit.begin() + 1, hit.end(), [](bool b) { return b; })) ++total;
  }
  return total;
}

std::unordered_map<EntryKey, Count, EntryKeyHash> brute_table(const SimpleGraph& g, const std::vector<EdgeId>& edges,
                                                              const std::vector<VertexId>& mid,
                                                              const Coloring& coloring, int k, bool induced) {
  std::vector<VertexId> support;
  for (EdgeId e : edges) {
    support.push_back(g.edge(e)[0]);
    support.push_back(g.edge(e)[1]);
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  const int s = static_cast<int>(support.size());
  if (s > 24) throw InputError("brute-force table is limited to 24 vertices");
  auto local = [&](VertexId v) { return static_cast<int>(std::lower_bound(support.begin(), support.end(), v) - support.begin()); };

  std::unordered_map<EntryKey, Count, EntryKeyHash> out;
  for (std::uint32_t set = 0; set < (1u << s); ++set) {
    if (__builtin_popcount(set) > k) continue;
    std::vector<int> position(s, -1);
    SmallGraph base;
    PinLabels pins = no_pins();
    std::uint32_t colors = 0;
    for (int i = 0; i < s; ++i) {
      if (!((set >> i) & 1u)) continue;
      position[i] = base.add_vertex();
      const auto it = std::lower_bound(mid.begin(), mid.end(), support[i]);
      if (it != mid.end() && *it == support[i]) pins[position[i]] = static_cast<std::int16_t>(it - mid.begin());
      colors |= std::uint32_t{1} << (coloring.color[support[i]] - 1);
    }
    std::vector<std::array<int, 2>> inside;
    for (EdgeId e : edges) {
      const int a = position[local(g.edge(e)[0])], b = position[local(g.edge(e)[1])];
      if (a >= 0 && b >= 0) inside.push_back({a, b});
    }
    const int m = static_cast<int>(inside.size());
    for (std::uint64_t keep = 0; keep < (std::uint64_t{1} << m); ++keep) {
      if (induced && keep != (std::uint64_t{1} << m) - 1) continue;
      SmallGraph h = base;
      for (int i = 0; i < m; ++i)
        if ((keep >> i) & 1u) h.add_edge(inside[i][0], inside[i][1]);
      const CanonicalLabeling lab = canonical_labeling(h, pins);
      out[EntryKey{lab.form.graph, lab.form.pins, colors}] += 1;
    }
  }
  return out;
}

}  // namespace surfcount
