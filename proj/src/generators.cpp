#include "surfcount/generators.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "surfcount/errors.hpp"

namespace surfcount {

Map map_from_neighbor_orders(const std::vector<std::vector<VertexId>>& order) {
  const int n = static_cast<int>(order.size());
  std::map<std::pair<VertexId, VertexId>, EdgeId> id;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : order[u])
      if (u < v) id.emplace(std::pair{u, v}, 0);
  std::vector<std::array<VertexId, 2>> edges;
  for (auto& [uv, e] : id) {
    e = static_cast<EdgeId>(edges.size());
    edges.push_back({uv.first, uv.second});
  }
  std::vector<std::vector<DartId>> rotation(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : order[u]) {
      const auto it = id.find({std::min(u, v), std::max(u, v)});
      if (it == id.end()) throw InputError("neighbour orders are not symmetric");
      rotation[u].push_back(make_dart(it->second, u < v ? 0 : 1));
    }
  return Map(n, std::move(edges), std::move(rotation));
}

Map path_map(int n) {
  std::vector<std::vector<VertexId>> order(n);
  for (int i = 0; i + 1 < n; ++i) {
    order[i].push_back(i + 1);
    order[i + 1].push_back(i);
  }
  return map_from_neighbor_orders(order);
}

Map cycle_map(int n) {
  std::vector<std::vector<VertexId>> order(n);
  for (int i = 0; i < n; ++i) order[i] = {(i + 1) % n, (i + n - 1) % n};
  return map_from_neighbor_orders(order);
}

Map star_map(int leaves) {
  std::vector<std::vector<VertexId>> order(leaves + 1);
  for (int i = 1; i <= leaves; ++i) {
    order[0].push_back(i);
    order[i].push_back(0);
  }
  return map_from_neighbor_orders(order);
}

Map grid_map(int rows, int cols) {
  std::vector<std::vector<VertexId>> order(rows * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      auto& o = order[i * cols + j];
      // counter-clockwise: right, up, left, down
      if (j + 1 < cols) o.push_back(i * cols + j + 1);
      if (i > 0) o.push_back((i - 1) * cols + j);
      if (j > 0) o.push_back(i * cols + j - 1);
      if (i + 1 < rows) o.push_back((i + 1) * cols + j);
    }
  return map_from_neighbor_orders(order);
}

Map wheel_map(int rim) {
  std::vector<std::vector<VertexId>> order(rim + 1);
  for (int i = 1; i <= rim; ++i) {
    order[0].push_back(i);
    const int next = i % rim + 1, prev = (i + rim - 2) % rim + 1;
    order[i] = {next, 0, prev};
  }
  return map_from_neighbor_orders(order);
}

Map k4_map() { return wheel_map(3); }

Map cube_map() {
  std::vector<std::vector<VertexId>> order(8);
  for (int i = 0; i < 4; ++i) {
    order[i] = {(i + 1) % 4, 4 + i, (i + 3) % 4};
    order[4 + i] = {i, 4 + (i + 1) % 4, 4 + (i + 3) % 4};
  }
  return map_from_neighbor_orders(order);
}

Map toroidal_k5() {
  std::vector<std::array<VertexId, 2>> edges;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) edges.push_back({u, v});
  return Map(5, edges, {{0, 2, 4, 6}, {1, 8, 10, 12}, {3, 9, 16, 14}, {5, 15, 11, 18}, {7, 19, 13, 17}});
}

Map toroidal_k33() {
  std::vector<std::array<VertexId, 2>> edges;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) edges.push_back({u, v});
  return Map(6, edges, {{0, 2, 4}, {6, 8, 10}, {12, 14, 16}, {1, 7, 13}, {3, 9, 15}, {5, 11, 17}});
}

Map torus_grid_map(int rows, int cols) {
  if (rows < 3 || cols < 3) throw InputError("torus grid needs at least 3 rows and columns");
  std::vector<std::vector<VertexId>> order(rows * cols);
  auto at = [&](int i, int j) { return ((i + rows) % rows) * cols + (j + cols) % cols; };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) order[at(i, j)] = {at(i, j + 1), at(i - 1, j), at(i, j - 1), at(i + 1, j)};
  return map_from_neighbor_orders(order);
}

Map random_map(int n, int extra_edges, int max_genus, std::mt19937_64& rng) {
  if (n < 1) throw InputError("random_map needs at least one vertex");
  std::vector<std::array<VertexId, 2>> edges;
  std::vector<std::vector<DartId>> rotation(n);
  auto insert_at = [&](VertexId v, DartId d, std::size_t pos) {
    rotation[v].insert(rotation[v].begin() + static_cast<std::ptrdiff_t>(pos), d);
  };
  auto random_below = [&](std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
  };

  std::vector<VertexId> label(n);
  for (int i = 0; i < n; ++i) label[i] = i;
  std::shuffle(label.begin(), label.end(), rng);
  for (int i = 1; i < n; ++i) {
    const VertexId u = label[random_below(i)], v = label[i];
    const EdgeId e = static_cast<EdgeId>(edges.size());
    edges.push_back({u, v});
    insert_at(u, make_dart(e, 0), random_below(rotation[u].size() + 1));
    rotation[v].push_back(make_dart(e, 1));
  }

  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : edges) adjacent[u][v] = adjacent[v][u] = 1;
  int g = 0;
  for (int added = 0, attempts = 0; n > 2 && added < extra_edges && attempts < 50 * (extra_edges + 1); ++attempts) {
    const Map current(n, edges, rotation);
    const FaceTrace faces = trace_face_structure(current);
    const DartId d1 = static_cast<DartId>(random_below(current.dart_count()));
    const DartId d2 = static_cast<DartId>(random_below(current.dart_count()));
    const VertexId u = current.tail(d1), v = current.tail(d2);
    if (u == v || adjacent[u][v]) continue;
    const bool same_face = faces.face_of_dart[d1] == faces.face_of_dart[d2];
    if (!same_face && g >= max_genus) continue;
    const EdgeId e = static_cast<EdgeId>(edges.size());
    edges.push_back({u, v});
    insert_at(u, make_dart(e, 0), static_cast<std::size_t>(current.position(d1)));
    insert_at(v, make_dart(e, 1), static_cast<std::size_t>(current.position(d2)));
    adjacent[u][v] = adjacent[v][u] = 1;
    if (!same_face) ++g;
    ++added;
  }
  Map out(n, std::move(edges), std::move(rotation));
  SURFCOUNT_CHECK(genus(out) == g, "random map genus bookkeeping is off");
  return out;
}

SimpleGraph named_pattern(const std::string& name) {
  std::vector<std::array<VertexId, 2>> edges;
  int n = 0;
  std::stringstream parts(name);
  std::string part;
  auto bad = [&] { return InputError("unknown pattern name '" + name + "'"); };
  while (std::getline(parts, part, '+')) {
    std::size_t i = 0;
    int copies = 0;
    while (i < part.size() && std::isdigit(static_cast<unsigned char>(part[i]))) copies = copies * 10 + (part[i++] - '0');
    if (i == 0) copies = 1;
    if (i + 1 >= part.size() || copies < 1) throw bad();
    const char kind = part[i];
    int size = 0;
    for (std::size_t j = i + 1; j < part.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(part[j]))) throw bad();
      size = size * 10 + (part[j] - '0');
      if (size > 64) throw bad();
    }
    for (int c = 0; c < copies; ++c) {
      const int base = n;
      switch (kind) {
        case 'K':
          if (size < 1) throw bad();
          for (int a = 0; a < size; ++a)
            for (int b = a + 1; b < size; ++b) edges.push_back({base + a, base + b});
          n += size;
          break;
        case 'P':
          if (size < 1) throw bad();
          for (int a = 0; a + 1 < size; ++a) edges.push_back({base + a, base + a + 1});
          n += size;
          break;
        case 'C':
          if (size < 3) throw bad();
          for (int a = 0; a < size; ++a) edges.push_back({base + a, base + (a + 1) % size});
          n += size;
          break;
        case 'S':
          if (size < 1) throw bad();
          for (int a = 1; a <= size; ++a) edges.push_back({base, base + a});
          n += size + 1;
          break;
        default:
          throw bad();
      }
    }
  }
  if (n > 64) throw bad();
  return SimpleGraph(n, edges);
}

}  // namespace surfcount
