#include <queue>
#include <random>

#include "doctest.h"
#include "surfcount/embedded_map.hpp"
#include "surfcount/errors.hpp"
#include "surfcount/generators.hpp"

using namespace surfcount;

namespace {

std::vector<std::vector<int>> all_distances(const Map& map) {
  std::vector<std::vector<int>> out;
  for (VertexId s = 0; s < map.vertex_count(); ++s) {
    const auto layers = bfs_layers(map, s);
    out.push_back(layers.layer_of);
  }
  return out;
}

std::vector<int> walk_lengths(const Map& map) {
  std::vector<int> out;
  for (const auto& w : trace_faces(map)) out.push_back(static_cast<int>(w.length()));
  std::sort(out.begin(), out.end());
  return out;
}

Map k2_map() { return path_map(2); }

}  // namespace

TEST_CASE("face tracing on small maps") {
  CHECK(walk_lengths(cycle_map(3)) == std::vector<int>{3, 3});
  CHECK(walk_lengths(k2_map()) == std::vector<int>{2});
  CHECK(walk_lengths(k4_map()) == std::vector<int>{3, 3, 3, 3});
  CHECK(face_count(Map()) == 1);
  CHECK(genus(Map()) == 0);
}

TEST_CASE("face walks partition the darts") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Map map = random_map(3 + trial % 10, trial % 12, trial % 3, rng);
    const FaceTrace trace = trace_face_structure(map);
    std::vector<int> seen(map.dart_count(), 0);
    std::size_t total = 0;
    for (std::size_t f = 0; f < trace.walks.size(); ++f) {
      const auto& darts = trace.walks[f].darts;
      total += darts.size();
      for (std::size_t k = 0; k < darts.size(); ++k) {
        ++seen[darts[k]];
        CHECK(trace.face_of_dart[darts[k]] == static_cast<int>(f));
        CHECK(map.face_successor(darts[k]) == darts[(k + 1) % darts.size()]);
      }
    }
    CHECK(total == static_cast<std::size_t>(map.dart_count()));
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("genus of fixtures") {
  CHECK(genus(k2_map()) == 0);
  CHECK(genus(cube_map()) == 0);
  CHECK(face_count(cube_map()) == 6);
  CHECK(face_count(toroidal_k5()) == 5);
  CHECK(genus(toroidal_k5()) == 1);
  CHECK(face_count(toroidal_k33()) == 3);
  CHECK(genus(toroidal_k33()) == 1);
  CHECK(genus(grid_map(5, 7)) == 0);
  CHECK(genus(wheel_map(9)) == 0);
  CHECK(genus(torus_grid_map(4, 5)) == 1);
}

TEST_CASE("map construction rejects malformed rotation systems") {
  const std::vector<std::array<VertexId, 2>> edges{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(Map(3, edges, {{0}, {1, 2}, {}}), InputError);         // dart 3 missing
  CHECK_THROWS_AS(Map(3, edges, {{0}, {1, 2, 2}, {3}}), InputError);     // duplicate dart
  CHECK_THROWS_AS(Map(3, edges, {{1}, {0, 2}, {3}}), InputError);        // darts at the wrong vertex
  CHECK_THROWS_AS(Map(4, edges, {{0}, {1, 2}, {3}, {}}), InputError);    // disconnected
  CHECK_NOTHROW(Map(3, edges, {{0}, {1, 2}, {3}}));
}

TEST_CASE("genus rejects impossible face counts") {
  // A loop with both darts at one vertex is fine; genus must come out as an integer.
  const Map loop(1, {{0, 0}}, {{0, 1}});
  CHECK(face_count(loop) == 2);
  CHECK(genus(loop) == 0);
  const Map twisted(1, {{0, 0}, {0, 0}}, {{0, 2, 1, 3}});
  CHECK(genus(twisted) == 1);
}

TEST_CASE("dual maps") {
  const DualMap c3 = dual(cycle_map(3));
  CHECK(c3.map.vertex_count() == 2);
  CHECK(c3.map.edge_count() == 3);
  for (EdgeId e = 0; e < 3; ++e) CHECK(c3.map.ends(e)[0] != c3.map.ends(e)[1]);

  const DualMap k2 = dual(k2_map());
  CHECK(k2.map.vertex_count() == 1);
  CHECK(k2.map.edge_count() == 1);
  CHECK(k2.map.ends(0)[0] == k2.map.ends(0)[1]);

  const DualMap cube = dual(cube_map());
  CHECK(cube.map.vertex_count() == 6);
  CHECK(cube.map.edge_count() == 12);
  for (VertexId v = 0; v < 6; ++v) CHECK(cube.map.degree(v) == 4);
}

TEST_CASE("dual and radial preserve genus") {
  std::mt19937_64 rng(11);
  std::vector<Map> maps{cycle_map(3), k2_map(), k4_map(), cube_map(), toroidal_k5(), toroidal_k33(),
                        torus_grid_map(3, 4)};
  for (int trial = 0; trial < 40; ++trial) maps.push_back(random_map(2 + trial % 12, trial % 15, 2, rng));
  for (const Map& map : maps) {
    const int g = genus(map);
    const Map d = dual(map).map;
    CHECK(genus(d) == g);
    CHECK(d.vertex_count() == face_count(map));
    CHECK(face_count(d) == map.vertex_count());
    CHECK(genus(dual(d).map) == g);
    CHECK(dual(d).map.vertex_count() == map.vertex_count());

    const RadialGraph r = radial(map);
    CHECK(genus(r.map) == g);
    CHECK(r.map.vertex_count() == map.vertex_count() + face_count(map));
    CHECK(r.map.edge_count() == 2 * map.edge_count());
    // Bipartite between original and face vertices.
    for (EdgeId e = 0; e < r.map.edge_count(); ++e)
      CHECK(r.is_original(r.map.ends(e)[0]) != r.is_original(r.map.ends(e)[1]));
    // Every radial face is a quadrilateral around one source edge.
    CHECK(static_cast<int>(r.faces.walks.size()) == map.edge_count());
    for (EdgeId e = 0; e < map.edge_count(); ++e) {
      const int face = r.face_of_source_edge[e];
      CHECK(r.source_edge_of_face[face] == e);
      CHECK(r.faces.walks[face].length() == 4);
      std::vector<VertexId> originals;
      for (DartId d : r.faces.walks[face].darts)
        if (r.is_original(r.map.tail(d))) originals.push_back(r.map.tail(d));
      std::sort(originals.begin(), originals.end());
      auto ends = map.ends(e);
      std::sort(ends.begin(), ends.end());
      CHECK(originals == std::vector<VertexId>{ends[0], ends[1]});
    }
  }
}

TEST_CASE("radial graph sizes") {
  const RadialGraph c3 = radial(cycle_map(3));
  CHECK(c3.map.vertex_count() == 5);
  CHECK(c3.map.edge_count() == 6);
  const RadialGraph k2 = radial(k2_map());
  CHECK(k2.map.vertex_count() == 3);
  CHECK(k2.map.edge_count() == 2);
  const RadialGraph k4 = radial(k4_map());
  CHECK(k4.map.vertex_count() == 8);
  CHECK(k4.map.edge_count() == 12);
}

TEST_CASE("edge tripling") {
  const Map k2 = triple_edges(k2_map());
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 3);
  CHECK(face_count(k2) == 3);
  CHECK(genus(k2) == 0);
  CHECK(k2.origin(0) == EdgeOrigin::original);
  CHECK(k2.origin(1) == EdgeOrigin::added);
  CHECK(k2.origin(2) == EdgeOrigin::added);

  const Map c3 = triple_edges(cycle_map(3));
  CHECK(c3.edge_count() == 9);
  CHECK(face_count(c3) == 8);

  const Map twice = triple_edges(c3);
  CHECK(twice.edge_count() == 27);
  CHECK(genus(twice) == 0);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Map map = trial == 0 ? toroidal_k5() : random_map(2 + trial % 9, trial % 10, 2, rng);
    const Map t = triple_edges(map);
    CHECK(genus(t) == genus(map));
    CHECK(all_distances(t) == all_distances(map));
    for (VertexId v = 0; v < t.vertex_count(); ++v) CHECK(t.degree(v) >= 3);
    // Each original edge borders two faces of length 2.
    const FaceTrace trace = trace_face_structure(t);
    for (EdgeId e = 0; e < map.edge_count(); ++e)
      for (int slot = 0; slot < 2; ++slot) CHECK(trace.walks[trace.face_of_dart[make_dart(e, slot)]].length() == 2);
  }
}

TEST_CASE("bfs layering") {
  const auto star = bfs_layers(star_map(3), 0);
  CHECK(star.depth() == 1);
  CHECK(star.layers[1].size() == 3);
  const auto p3 = bfs_layers(path_map(3), 0);
  CHECK(p3.depth() == 2);
  for (const auto& layer : p3.layers) CHECK(layer.size() == 1);
  for (VertexId r = 0; r < 5; ++r) {
    const auto c5 = bfs_layers(cycle_map(5), r);
    CHECK(c5.depth() == 2);
    CHECK(c5.layers[0] == std::vector<VertexId>{r});
    CHECK(c5.layers[1].size() == 2);
    CHECK(c5.layers[2].size() == 2);
    CHECK(eccentricity(cycle_map(5), r) == 2);
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Map map = random_map(2 + trial, trial, 1, rng);
    const auto layers = bfs_layers(map, 0);
    CHECK(layers.parent_dart[0] == -1);
    for (VertexId v = 1; v < map.vertex_count(); ++v) {
      const DartId d = layers.parent_dart[v];
      CHECK(map.head(d) == v);
      CHECK(layers.layer_of[map.tail(d)] == layers.layer_of[v] - 1);
    }
  }
}

TEST_CASE("contraction") {
  const Map k2 = contract_edge(k2_map(), 0);
  CHECK(k2.vertex_count() == 1);
  CHECK(k2.edge_count() == 0);
  CHECK(genus(k2) == 0);

  const Map c3 = contract_edge(cycle_map(3), 0);
  CHECK(c3.vertex_count() == 2);
  CHECK(c3.edge_count() == 2);
  CHECK(genus(c3) == 0);

  const Map k5 = toroidal_k5();
  for (EdgeId e = 0; e < k5.edge_count(); ++e) CHECK(genus(contract_edge(k5, e)) <= 1);

  const Map loop(1, {{0, 0}}, {{0, 1}});
  CHECK_THROWS_AS(contract_edge(loop, 0), InputError);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Map map = random_map(3 + trial % 8, trial % 9, 2, rng);
    const EdgeId e = static_cast<EdgeId>(rng() % map.edge_count());
    const Map c = contract_edge(map, e);
    CHECK(c.vertex_count() == map.vertex_count() - 1);
    CHECK(c.edge_count() == map.edge_count() - 1);
    CHECK(genus(c) <= genus(map));
    // Contracting a non-loop edge leaves face count unchanged.
    CHECK(face_count(c) == face_count(map));
  }
}

TEST_CASE("delete, subdivide and suppress") {
  const Map c4 = subdivide_edge(cycle_map(3), 0);
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(genus(c4) == 0);
  CHECK(same_embedding(suppress_vertex(c4, 3), cycle_map(3)));
  CHECK_THROWS_AS(suppress_vertex(k4_map(), 0), InputError);

  const Map t = triple_edges(k2_map());
  CHECK(face_count(delete_edge(t, 1)) == face_count(t) - 1);
  CHECK_THROWS_AS(delete_edge(k2_map(), 0), InputError);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Map map = random_map(2 + trial % 8, trial % 9, 2, rng);
    const EdgeId e = static_cast<EdgeId>(rng() % map.edge_count());
    const Map s = subdivide_edge(map, e);
    CHECK(genus(s) == genus(map));
    CHECK(same_embedding(suppress_vertex(s, map.vertex_count()), map));
  }
}

TEST_CASE("edge bound m <= 3n - 6 + 6g on simple maps") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 12;
    const Map map = random_map(n, 3 * n, trial % 3, rng);
    CHECK(map.is_simple());
    CHECK(map.edge_count() <= 3 * n - 6 + 6 * genus(map));
  }
  for (const Map& map : {toroidal_k5(), toroidal_k33(), cube_map(), grid_map(6, 6), torus_grid_map(5, 5)})
    CHECK(map.edge_count() <= 3 * map.vertex_count() - 6 + 6 * genus(map));
}
