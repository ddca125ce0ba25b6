#include <map>
#include <random>

#include "doctest.h"
#include "surfcount/errors.hpp"
#include "surfcount/isomorphism.hpp"
#include "iso_family.hpp"

using namespace surfcount;

namespace {

SimpleGraph from_edges(int n, std::vector<std::array<VertexId, 2>> edges) { return SimpleGraph(n, edges); }

SimpleGraph path(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph cycle(int n) {
  SimpleGraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

SimpleGraph complete(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

PinLabels small_pins(const std::vector<int>& pins) {
  PinLabels out = no_pins();
  for (std::size_t v = 0; v < pins.size(); ++v) out[v] = static_cast<std::int16_t>(pins[v]);
  return out;
}

std::string form(const SimpleGraph& g, const std::vector<int>& pins) {
  return canonical_form(to_small(g), small_pins(pins));
}

}  // namespace

TEST_CASE("pinned isomorphism examples") {
  const SimpleGraph k2 = complete(2);
  CHECK(pinned_isomorphic(k2, {0, 1}, k2, {0, 1}));
  const SimpleGraph p3 = path(3);
  CHECK_FALSE(pinned_isomorphic(p3, {0, -1, -1}, p3, {-1, 0, -1}));
  const SimpleGraph c4 = cycle(4);
  for (int v = 0; v < 4; ++v) {
    std::vector<int> pins(4, -1);
    pins[v] = 0;
    CHECK(pinned_isomorphic(c4, {0, -1, -1, -1}, c4, pins));
  }
  CHECK_THROWS_AS(pinned_isomorphic(k2, {0, -1}, k2, {1, -1}), InputError);
  CHECK_THROWS_AS(pinned_isomorphic(k2, {0, 0}, k2, {0, 0}), InputError);
}

TEST_CASE("gadget sizes") {
  const SimpleGraph p3 = path(3);
  CHECK(gadget_transform(p3, {-1, -1, -1}, 3).vertex_count() == 3);
  CHECK(gadget_transform(p3, {-1, 0, -1}, 3).vertex_count() == 6);
  const SimpleGraph two = gadget_transform(p3, {1, -1, 0}, 2);
  CHECK(two.vertex_count() == 3 + 6);
  CHECK(two.degree(2) == 2 + 1);  // label 0 comes first: k pendants
  CHECK(two.degree(0) == 4 + 1);  // label 1: 2k pendants
}

TEST_CASE("canonical form examples") {
  const SimpleGraph p3 = path(3);
  const SimpleGraph relabeled = from_edges(3, {{2, 0}, {0, 1}});
  CHECK(form(p3, {}) == form(relabeled, {}));
  CHECK(form(p3, {}) != form(complete(3), {}));
  CHECK(form(p3, {0, -1, -1}) == form(p3, {-1, -1, 0}));
  CHECK(form(p3, {0, -1, -1}) != form(p3, {-1, 0, -1}));
  CHECK(form(p3, {0, -1, 1}) == form(p3, {1, -1, 0}));
  CHECK(form(SimpleGraph(0), {}) == form(SimpleGraph(0), {}));
  CHECK(form(SimpleGraph(1), {}) != form(SimpleGraph(0), {}));
}

TEST_CASE("automorphism counts") {
  CHECK(automorphism_count(complete(3)) == 6);
  CHECK(automorphism_count(path(3)) == 2);
  CHECK(automorphism_count(cycle(4)) == 8);
  std::uint64_t factorial = 1;
  for (int n = 1; n <= 5; ++n) {
    factorial *= n;
    CHECK(automorphism_count(complete(n)) == factorial);
  }
  CHECK(automorphism_count(SimpleGraph(4)) == 24);
  CHECK(automorphism_count(cycle(6)) == 12);
  SimpleGraph star(7);
  for (int v = 1; v < 7; ++v) star.add_edge(0, v);
  CHECK(automorphism_count(star) == 720);
}

TEST_CASE("canonical forms are labelling invariant") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    std::vector<int> pins(n, -1);
    int label = 0;
    for (int v = 0; v < n; ++v)
      if (rng() % 3 == 0) pins[v] = label++;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SimpleGraph h(n);
    for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    std::vector<int> moved(n);
    for (int v = 0; v < n; ++v) moved[perm[v]] = pins[v];
    CHECK(form(g, pins) == form(h, moved));
    CHECK(pinned_isomorphic(g, pins, h, moved));
    CHECK(isomorphic(gadget_transform(g, pins, n), gadget_transform(h, moved, n)));

    const auto lab = canonical_labeling(to_small(g), small_pins(pins));
    for (const auto& [u, v] : g.edges()) CHECK(lab.form.graph.has_edge(lab.position[u], lab.position[v]));
  }
}

TEST_CASE("equivalence deciders agree on small graphs") {
  // Exhaustive on up to 5 vertices; the full 6-vertex sweep runs in the
  // acceptance suite.
  const auto result = iso_family::compare_deciders(5);
  CHECK(result.pairs > 0);
  CHECK(result.canonical_mismatches == 0);
  CHECK(result.gadget_mismatches == 0);
}
