#include "surfcount/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "surfcount/errors.hpp"

namespace surfcount {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty line split into tokens; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      tokens.clear();
      for (std::string t; ss >> t;) tokens.push_back(std::move(t));
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("line " + std::to_string(line_no_) + ": " + what);
  }

  int integer(const std::string& token, int lo, int hi) const {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) fail("expected an integer, got '" + token + "'");
    if (value < lo || value > hi)
      fail("value " + token + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return value;
  }

  void expect(const std::vector<std::string>& tokens, const std::string& keyword, std::size_t min_size,
              std::size_t max_size) const {
    if (tokens[0] != keyword) fail("expected '" + keyword + "', got '" + tokens[0] + "'");
    if (tokens.size() < min_size || tokens.size() > max_size) fail("wrong number of fields for '" + keyword + "'");
  }

  int line() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

constexpr int kMaxCount = 1 << 28;

}  // namespace

Map parse_map(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> t;
  if (!reader.next(t)) throw InputError("empty map file");
  reader.expect(t, "map", 3, 3);
  const int n = reader.integer(t[1], 1, kMaxCount);
  const int m = reader.integer(t[2], 0, kMaxCount);
  std::vector<std::array<VertexId, 2>> edges(m);
  for (int i = 0; i < m; ++i) {
    if (!reader.next(t)) reader.fail("missing edge line " + std::to_string(i));
    reader.expect(t, "edge", 4, 4);
    const int id = reader.integer(t[1], 0, m - 1);
    if (id != i) reader.fail("edge ids must be listed in order 0..m-1");
    edges[i] = {reader.integer(t[2], 0, n - 1), reader.integer(t[3], 0, n - 1)};
  }
  std::vector<std::vector<DartId>> rotation(n);
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (!reader.next(t)) reader.fail("missing rotation line for a vertex");
    reader.expect(t, "rot", 2, static_cast<std::size_t>(2 * m + 2));
    const int u = reader.integer(t[1], 0, n - 1);
    if (seen[u]) reader.fail("duplicate rotation for vertex " + t[1]);
    seen[u] = 1;
    for (std::size_t k = 2; k < t.size(); ++k) {
      const auto dot = t[k].find('.');
      if (dot == std::string::npos) reader.fail("dart '" + t[k] + "' must be written <edge>.<slot>");
      const int e = reader.integer(t[k].substr(0, dot), 0, m - 1);
      const int slot = reader.integer(t[k].substr(dot + 1), 0, 1);
      rotation[u].push_back(make_dart(e, slot));
    }
  }
  if (reader.next(t)) reader.fail("trailing content after the rotation system");
  try {
    return Map(n, std::move(edges), std::move(rotation));
  } catch (const InputError& e) {
    throw InputError(std::string("map: ") + e.what());
  }
}

void write_map(std::ostream& out, const Map& map) {
  out << "map " << map.vertex_count() << ' ' << map.edge_count() << '\n';
  for (EdgeId e = 0; e < map.edge_count(); ++e)
    out << "edge " << e << ' ' << map.ends(e)[0] << ' ' << map.ends(e)[1] << '\n';
  for (VertexId v = 0; v < map.vertex_count(); ++v) {
    out << "rot " << v;
    for (DartId d : map.rotation(v)) out << ' ' << dart_edge(d) << '.' << dart_slot(d);
    out << '\n';
  }
}

SimpleGraph parse_pattern(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> t;
  if (!reader.next(t)) throw InputError("empty pattern file");
  reader.expect(t, "graph", 3, 3);
  const int n = reader.integer(t[1], 0, kMaxCount);
  const int m = reader.integer(t[2], 0, kMaxCount);
  SimpleGraph g(n);
  for (int i = 0; i < m; ++i) {
    if (!reader.next(t)) reader.fail("missing edge line " + std::to_string(i));
    reader.expect(t, "edge", 3, 3);
    const int u = reader.integer(t[1], 0, n - 1), v = reader.integer(t[2], 0, n - 1);
    try {
      g.add_edge(u, v);
    } catch (const InputError& e) {
      reader.fail(e.what());
    }
  }
  if (reader.next(t)) reader.fail("trailing content after the edge list");
  return g;
}

void write_pattern(std::ostream& out, const SimpleGraph& g) {
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "edge " << u << ' ' << v << '\n';
}

std::vector<int> parse_colors(std::istream& in, int vertex_count) {
  LineReader reader(in);
  std::vector<std::string> t;
  std::vector<int> color(vertex_count, 0);
  while (reader.next(t)) {
    reader.expect(t, "color", 3, 3);
    const int v = reader.integer(t[1], 0, vertex_count - 1);
    if (color[v] != 0) reader.fail("vertex " + t[1] + " coloured twice");
    color[v] = reader.integer(t[2], 1, kMaxCount);
  }
  for (int v = 0; v < vertex_count; ++v)
    if (color[v] == 0) throw InputError("vertex " + std::to_string(v) + " has no colour");
  return color;
}

BranchDecomposition parse_bd(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> t;
  if (!reader.next(t)) throw InputError("empty decomposition file");
  reader.expect(t, "bd", 2, 2);
  const int count = reader.integer(t[1], 0, kMaxCount);
  std::vector<BranchDecomposition::Node> nodes(count);
  std::vector<char> seen(count, 0);
  std::vector<std::array<int, 2>> edges;
  while (reader.next(t)) {
    if (t[0] == "tnode") {
      if (t.size() < 3) reader.fail("wrong number of fields for 'tnode'");
      const int id = reader.integer(t[1], 0, count - 1);
      if (seen[id]) reader.fail("duplicate tree node " + t[1]);
      seen[id] = 1;
      if (t[2] == "leaf") {
        reader.expect(t, "tnode", 4, 4);
        nodes[id] = {TreeNodeKind::leaf, reader.integer(t[3], 0, kMaxCount)};
      } else if (t[2] == "internal" || t[2] == "root") {
        reader.expect(t, "tnode", 3, 3);
        nodes[id] = {t[2] == "root" ? TreeNodeKind::root : TreeNodeKind::internal, -1};
      } else {
        reader.fail("unknown node kind '" + t[2] + "'");
      }
    } else if (t[0] == "tedge") {
      reader.expect(t, "tedge", 3, 3);
      edges.push_back({reader.integer(t[1], 0, count - 1), reader.integer(t[2], 0, count - 1)});
    } else if (t[0] == "mid") {
      if (t.size() < 3) reader.fail("wrong number of fields for 'mid'");
      for (std::size_t k = 1; k < t.size(); ++k) reader.integer(t[k], 0, kMaxCount);
    } else {
      reader.fail("unknown record '" + t[0] + "'");
    }
  }
  for (int x = 0; x < count; ++x)
    if (!seen[x]) throw InputError("tree node " + std::to_string(x) + " is not declared");
  return BranchDecomposition(std::move(nodes), std::move(edges));
}

void write_bd(std::ostream& out, const BranchDecomposition& bd, const MiddleSetAnnotation* mids) {
  out << "bd " << bd.node_count() << '\n';
  for (int x = 0; x < bd.node_count(); ++x) {
    const auto& node = bd.node(x);
    out << "tnode " << x;
    switch (node.kind) {
      case TreeNodeKind::leaf:
        out << " leaf " << node.edge;
        break;
      case TreeNodeKind::internal:
        out << " internal";
        break;
      case TreeNodeKind::root:
        out << " root";
        break;
    }
    out << '\n';
  }
  for (const auto& [a, b] : bd.tree_edges()) out << "tedge " << a << ' ' << b << '\n';
  if (mids == nullptr) return;
  for (int te = 0; te < bd.tree_edge_count(); ++te) {
    out << "mid " << bd.tree_edge(te)[0] << ' ' << bd.tree_edge(te)[1];
    for (VertexId v : mids->mid[te]) out << ' ' << v;
    out << '\n';
  }
}

Map read_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return parse_map(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

SimpleGraph read_pattern_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return parse_pattern(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace surfcount
