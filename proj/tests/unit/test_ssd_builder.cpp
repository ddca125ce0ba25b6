#include <map>
#include <random>

#include "doctest.h"
#include "surfcount/generators.hpp"
#include "surfcount/graph.hpp"
#include "surfcount/ssd_builder.hpp"
#include "test_support.hpp"

using namespace surfcount;

namespace {

// Rotation of every vertex as cyclic label sequences, keyed by host vertex
// (-1 for the apex). A dart is labelled by its host edge and whether it
// sits at the apex.
std::map<VertexId, std::vector<std::pair<EdgeId, bool>>> labelled_rotations(const LayerGraph& h) {
  std::map<VertexId, std::vector<std::pair<EdgeId, bool>>> out;
  for (VertexId v = 0; v < h.map.vertex_count(); ++v) {
    std::vector<std::pair<EdgeId, bool>> labels;
    for (DartId d : h.map.rotation(v)) labels.emplace_back(h.host_edge[dart_edge(d)], v == h.apex);
    if (!labels.empty()) std::rotate(labels.begin(), std::min_element(labels.begin(), labels.end()), labels.end());
    out[h.host_vertex[v]] = labels;
  }
  return out;
}

std::vector<std::array<VertexId, 2>> host_edges_of(const LayerGraph& h) {
  std::vector<std::array<VertexId, 2>> out;
  for (EdgeId e = 0; e < h.window_edge_count; ++e) {
    auto [a, b] = h.map.ends(e);
    out.push_back({std::min(h.host_vertex[a], h.host_vertex[b]), std::max(h.host_vertex[a], h.host_vertex[b])});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Map> corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Map> maps{cycle_map(3), cycle_map(5), path_map(3), k4_map(), cube_map(), toroidal_k5(),
                        toroidal_k33(), grid_map(3, 3), wheel_map(6), torus_grid_map(3, 4)};
  for (int trial = 0; trial < count; ++trial) maps.push_back(random_map(2 + trial % 14, trial % 17, trial % 3, rng));
  return maps;
}

}  // namespace

TEST_CASE("first stage leftover edges") {
  CHECK(first_stage(triple_edges(cycle_map(3)), 0).leftover.empty());
  CHECK(first_stage(triple_edges(grid_map(3, 4)), 5).leftover.empty());
  CHECK(first_stage(triple_edges(toroidal_k5()), 0).leftover.size() == 2);

  const FirstStage k2 = first_stage(triple_edges(path_map(2)), 0);
  const int faces = static_cast<int>(k2.radial.faces.walks.size());
  CHECK(std::count(k2.in_dual_tree.begin(), k2.in_dual_tree.end(), true) == faces - 1);
}

TEST_CASE("small decompositions") {
  const SsdResult k2 = construct_ssd(path_map(2), 0);
  CHECK(k2.bd.degenerate());
  CHECK(k2.mids.width == 0);

  const SsdResult p3 = construct_ssd(path_map(3), 0);
  CHECK(p3.bd.leaf_count() == 2);
  CHECK(p3.mids.width == 1);

  for (VertexId r = 0; r < 3; ++r) {
    const SsdResult c3 = construct_ssd(cycle_map(3), r);
    CHECK(c3.width_bound() == 3);
    CHECK(c3.mids.width == 2);
  }
  for (VertexId r = 0; r < 5; ++r) {
    const SsdResult k5 = construct_ssd(toroidal_k5(), r);
    CHECK(k5.width_bound() == 10);
    CHECK(k5.mids.width <= 10);
    CHECK(k5.leftover_edges == 2);
  }
  const SsdResult empty = construct_ssd(Map(), 0);
  CHECK(empty.bd.empty());
}

TEST_CASE("decomposition invariants on a corpus") {
  for (const Map& map : corpus(101, 80)) {
    for (VertexId r : {0, map.vertex_count() - 1}) {
      const SsdResult ssd = construct_ssd(map, r);
      CHECK(ssd.bd.leaf_count() == map.edge_count());
      CHECK_NOTHROW(ssd.bd.validate(map.edge_count()));
      CHECK(ssd.mids.width <= ssd.width_bound());
      for (const auto& mid : ssd.mids.mid) CHECK(static_cast<int>(mid.size()) <= ssd.width_bound());
      if (map.edge_count() >= 2) {
        CHECK(ssd.leftover_edges == 2 * ssd.genus);
        CHECK(verify_certificate(ssd.bd, ssd.certificate, ssd.radial));
      }
      if (ssd.genus == 0) CHECK(ssd.mids.width <= 2 * ssd.eccentricity + 1);
      // The light-weight entry point builds the same tree.
      CHECK(build_ssd(map, r).tree_edges() == ssd.bd.tree_edges());
    }
  }
}

TEST_CASE("layer graph of C5") {
  const Map c5 = cycle_map(5);
  const LayeredMap layered = prepare_layers(c5, 0);
  const LayerGraph h = build_layer_graph(layered, 1, 2);
  CHECK(h.map.vertex_count() == 5);
  CHECK(h.map.edge_count() == 5);
  CHECK(genus(h.map) == 0);
  for (VertexId v = 0; v < 5; ++v) CHECK(h.map.degree(v) == 2);
  CHECK(eccentricity(h.map, h.apex) == 2);

  const BranchDecomposition restricted = restrict_decomposition(build_ssd(h.map, h.apex), h.window_edge_count);
  CHECK(restricted.leaf_count() == 3);
  auto window = h.map.edge_list();
  window.resize(h.window_edge_count);
  CHECK(compute_middle_sets(restricted, h.map.vertex_count(), window).width <= 2);
}

TEST_CASE("layer graph sizes on the grid") {
  const Map grid = grid_map(3, 3);
  const LayeredMap layered = prepare_layers(grid, 0);
  const LayerGraph h = build_layer_graph(layered, 1, 2);
  CHECK(h.map.vertex_count() == 2 + 3 + 1);
  CHECK(h.layer_of.back() == -1);
}

TEST_CASE("layer graphs match the literal edit construction") {
  for (const Map& map : corpus(202, 60)) {
    for (VertexId r : {0, map.vertex_count() / 2}) {
      const LayeredMap layered = prepare_layers(map, r);
      const int d = layered.layers.depth();
      const SimpleGraph host = underlying_graph(map);
      for (int i = 0; i <= d; ++i)
        for (int j = i; j <= d; ++j) {
          const LayerGraph direct = build_layer_graph(layered, i, j);
          const LayerGraph edits = build_layer_graph_by_edits(layered, i, j);
          CHECK(labelled_rotations(direct) == labelled_rotations(edits));
          CHECK(direct.map.vertex_count() == edits.map.vertex_count());
          CHECK(direct.map.edge_count() == edits.map.edge_count());
          CHECK(genus(direct.map) <= genus(map));
          CHECK(eccentricity(direct.map, direct.apex) == j - i + 1);
          CHECK(direct.apex == direct.map.vertex_count() - 1);
          for (EdgeId e = direct.window_edge_count; e < direct.map.edge_count(); ++e)
            CHECK(direct.map.ends(e)[0] == direct.apex);

          // Window edges are exactly the host edges inside layers i..j.
          std::vector<std::array<VertexId, 2>> expected;
          for (const auto& [u, v] : host.edges()) {
            const int lu = layered.layers.layer_of[u], lv = layered.layers.layer_of[v];
            if (lu >= i && lu <= j && lv >= i && lv <= j) expected.push_back({std::min(u, v), std::max(u, v)});
          }
          std::sort(expected.begin(), expected.end());
          CHECK(host_edges_of(direct) == expected);
          if (i == 0 && j == d) CHECK(direct.map.edge_count() == map.edge_count() + 1);
        }
    }
  }
}

TEST_CASE("restricted decompositions") {
  for (const Map& map : corpus(303, 50)) {
    const LayeredMap layered = prepare_layers(map, 0);
    const int d = layered.layers.depth();
    const int g = genus(map);
    for (int i = 0; i <= d; ++i)
      for (int j = i; j <= d; ++j) {
        const LayerGraph h = build_layer_graph(layered, i, j);
        const SsdResult full = construct_ssd(h.map, h.apex);
        const BranchDecomposition restricted = restrict_decomposition(full.bd, h.window_edge_count);
        CHECK(restricted.leaf_count() == h.window_edge_count);
        if (h.window_edge_count == 0) {
          CHECK(restricted.empty());
          continue;
        }
        auto window = h.map.edge_list();
        window.resize(h.window_edge_count);
        CHECK_NOTHROW(restricted.validate(h.window_edge_count));
        const auto mids = compute_middle_sets(restricted, h.map.vertex_count(), window);
        CHECK(mids.width <= full.mids.width);
        CHECK(mids.width <= (2 * g + 1) * (4 * (j - i) + 7) / 2);
        for (const auto& mid : mids.mid) CHECK_FALSE(std::binary_search(mid.begin(), mid.end(), h.apex));
      }
  }

  // A single host edge next to a single apex edge.
  const BranchDecomposition two({{TreeNodeKind::leaf, 0}, {TreeNodeKind::leaf, 1}}, {{0, 1}});
  const BranchDecomposition one = restrict_decomposition(two, 1);
  CHECK(one.degenerate());
  CHECK(one.node(0).edge == 0);
}
