#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "surfcount/graph.hpp"

namespace surfcount {

/// Vertex bound for the bit-parallel graphs used in DP tables.
constexpr int kMaxSmallVertices = 16;

/// Per-vertex pin label; kUnpinned for free vertices.
using PinLabels = std::array<std::int16_t, kMaxSmallVertices>;
constexpr std::int16_t kUnpinned = -1;

inline PinLabels no_pins() {
  PinLabels p;
  p.fill(kUnpinned);
  return p;
}

/// Simple graph on at most 16 vertices stored as adjacency bit rows.
struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, kMaxSmallVertices> adj{};

  int add_vertex() { return n++; }
  void add_edge(int u, int v) {
    adj[u] |= static_cast<std::uint16_t>(1u << v);
    adj[v] |= static_cast<std::uint16_t>(1u << u);
  }
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  int degree(int v) const { return __builtin_popcount(adj[v]); }
  int edge_count() const;

  friend bool operator==(const SmallGraph& a, const SmallGraph& b) {
    if (a.n != b.n) return false;
    for (int v = 0; v < a.n; ++v)
      if (a.adj[v] != b.adj[v]) return false;
    return true;
  }
};

SmallGraph to_small(const SimpleGraph& g);  // throws InputError above 16 vertices
SimpleGraph to_simple(const SmallGraph& g);

/// Canonical representative of a pinned graph: vertices renumbered into
/// canonical positions. Two pinned graphs are pinned-isomorphic iff their
/// forms are equal.
struct CanonicalForm {
  SmallGraph graph;
  PinLabels pins{};  // by canonical position

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.graph == b.graph && a.pins == b.pins;
  }
  std::string bytes() const;
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::array<std::uint8_t, kMaxSmallVertices> position{};  // vertex -> canonical position
};

CanonicalLabeling canonical_labeling(const SmallGraph& g, const PinLabels& pins);

/// Byte-string form of canonical_labeling.
std::string canonical_form(const SmallGraph& g, const PinLabels& pins);

/// Isomorphism test constrained to map each pinned vertex to the vertex with
/// the same label. `pins` holds one label per vertex (kUnpinned = free).
/// Throws InputError when the label sets differ.
bool pinned_isomorphic(const SimpleGraph& h1, const std::vector<int>& pins1, const SimpleGraph& h2,
                       const std::vector<int>& pins2);
bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

/// Pinned vertices in increasing label order v_1..v_t; v_i receives i*k new
/// pendant neighbours.
SimpleGraph gadget_transform(const SimpleGraph& h, const std::vector<int>& pins, int k);

/// |Aut(H)| by exhaustive search.
std::uint64_t automorphism_count(const SimpleGraph& h);

}  // namespace surfcount
