#include "surfcount/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "surfcount/errors.hpp"

namespace surfcount {

int SmallGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n; ++v) twice += degree(v);
  return twice / 2;
}

SmallGraph to_small(const SimpleGraph& g) {
  if (g.vertex_count() > kMaxSmallVertices)
    throw InputError("graph has more than " + std::to_string(kMaxSmallVertices) + " vertices");
  SmallGraph out;
  out.n = g.vertex_count();
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  return out;
}

SimpleGraph to_simple(const SmallGraph& g) {
  SimpleGraph out(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

std::string CanonicalForm::bytes() const {
  std::string out;
  out.push_back(static_cast<char>(graph.n));
  for (int i = 0; i < graph.n; ++i) {
    out.push_back(static_cast<char>(pins[i] & 0xff));
    out.push_back(static_cast<char>((pins[i] >> 8) & 0xff));
    out.push_back(static_cast<char>(graph.adj[i] & 0xff));
    out.push_back(static_cast<char>(graph.adj[i] >> 8));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical labelling of small pinned graphs: colour refinement plus
// individualisation, keeping the smallest leaf.

namespace {

using Colors = std::array<std::uint8_t, kMaxSmallVertices>;

// Renumbers colours by the sorted order of `key`; returns the colour count.
template <typename Key>
int rank_colors(int n, const std::array<Key, kMaxSmallVertices>& key, Colors& color) {
  std::array<Key, kMaxSmallVertices> sorted = key;
  std::sort(sorted.begin(), sorted.begin() + n);
  const int distinct = static_cast<int>(std::unique(sorted.begin(), sorted.begin() + n) - sorted.begin());
  for (int v = 0; v < n; ++v)
    color[v] = static_cast<std::uint8_t>(std::lower_bound(sorted.begin(), sorted.begin() + distinct, key[v]) -
                                         sorted.begin());
  return distinct;
}

int refine(const SmallGraph& g, Colors& color, int count) {
  const int n = g.n;
  for (;;) {
    std::array<std::pair<std::uint8_t, std::uint64_t>, kMaxSmallVertices> key{};
    for (int v = 0; v < n; ++v) {
      std::uint64_t counts = 0;
      for (std::uint32_t rest = g.adj[v]; rest != 0; rest &= rest - 1)
        counts += std::uint64_t{1} << (4 * color[__builtin_ctz(rest)]);
      key[v] = {color[v], counts};
    }
    const int next = rank_colors(n, key, color);
    if (next == count) return count;
    count = next;
  }
}

struct CanonSearch {
  const SmallGraph& g;
  const PinLabels& pins;
  bool have = false;
  CanonicalLabeling best;

  void leaf(const Colors& color) {
    CanonicalLabeling cand;
    cand.form.graph.n = g.n;
    cand.form.pins.fill(kUnpinned);
    for (int v = 0; v < g.n; ++v) cand.position[v] = color[v];
    for (int v = 0; v < g.n; ++v) {
      std::uint16_t row = 0;
      for (std::uint32_t rest = g.adj[v]; rest != 0; rest &= rest - 1)
        row |= static_cast<std::uint16_t>(1u << color[__builtin_ctz(rest)]);
      cand.form.graph.adj[color[v]] = row;
      cand.form.pins[color[v]] = pins[v];
    }
    if (!have || less(cand.form, best.form)) {
      best = cand;
      have = true;
    }
  }

  static bool less(const CanonicalForm& a, const CanonicalForm& b) {
    for (int i = 0; i < a.graph.n; ++i) {
      if (a.pins[i] != b.pins[i]) return a.pins[i] < b.pins[i];
      if (a.graph.adj[i] != b.graph.adj[i]) return a.graph.adj[i] < b.graph.adj[i];
    }
    return false;
  }

  void run(Colors color, int count) {
    count = refine(g, color, count);
    if (count == g.n) {
      leaf(color);
      return;
    }
    std::array<int, kMaxSmallVertices> size{};
    for (int v = 0; v < g.n; ++v) ++size[color[v]];
    int cell = -1;
    for (int c = 0; c < count; ++c)
      if (size[c] > 1 && (cell < 0 || size[c] < size[cell])) cell = c;
    std::array<int, kMaxSmallVertices> members{};
    int m = 0;
    for (int v = 0; v < g.n; ++v)
      if (color[v] == cell) members[m++] = v;

    // A cell of pairwise twins yields the same leaves from every member.
    bool twins = true;
    for (int a = 1; a < m && twins; ++a) {
      const int u = members[0], v = members[a];
      const std::uint16_t mu = static_cast<std::uint16_t>(g.adj[u] & ~(1u << v));
      const std::uint16_t mv = static_cast<std::uint16_t>(g.adj[v] & ~(1u << u));
      twins = mu == mv;
    }
    if (twins) m = 1;

    for (int a = 0; a < m; ++a) {
      std::array<int, kMaxSmallVertices> key{};
      for (int v = 0; v < g.n; ++v) key[v] = 2 * color[v] + ((color[v] == cell && v != members[a]) ? 1 : 0);
      Colors next{};
      const int next_count = rank_colors(g.n, key, next);
      run(next, next_count);
    }
  }
};

}  // namespace

CanonicalLabeling canonical_labeling(const SmallGraph& g, const PinLabels& pins) {
  CanonSearch search{g, pins, false, {}};
  if (g.n == 0) {
    search.best.form.pins.fill(kUnpinned);
    return search.best;
  }
  std::array<std::pair<int, int>, kMaxSmallVertices> key{};
  for (int v = 0; v < g.n; ++v) key[v] = pins[v] != kUnpinned ? std::pair{0, int{pins[v]}} : std::pair{1, g.degree(v)};
  Colors color{};
  const int count = rank_colors(g.n, key, color);
  search.run(color, count);
  return search.best;
}

std::string canonical_form(const SmallGraph& g, const PinLabels& pins) {
  return canonical_labeling(g, pins).form.bytes();
}

// ---------------------------------------------------------------------------
// General backtracking matcher, used for pinned/unpinned isomorphism of
// arbitrary-size graphs and for automorphism counting.

namespace {

struct Dense {
  int n = 0;
  std::vector<std::vector<char>> adj;
  std::vector<std::vector<int>> neighbors;

  explicit Dense(const SimpleGraph& g) : n(g.vertex_count()), adj(n, std::vector<char>(n, 0)), neighbors(n) {
    for (const auto& [u, v] : g.edges()) {
      adj[u][v] = adj[v][u] = 1;
      neighbors[u].push_back(v);
      neighbors[v].push_back(u);
    }
  }
};

// Joint colour refinement of a and b (as a disjoint union).
void refine_jointly(const Dense& a, const Dense& b, std::vector<long>& ca, std::vector<long>& cb) {
  auto distinct = [](const std::vector<long>& x, const std::vector<long>& y) {
    std::vector<long> all(x);
    all.insert(all.end(), y.begin(), y.end());
    std::sort(all.begin(), all.end());
    return std::unique(all.begin(), all.end()) - all.begin();
  };
  auto count = distinct(ca, cb);
  for (;;) {
    using Sig = std::pair<long, std::vector<long>>;
    std::map<Sig, long> rank;
    auto signature = [](const Dense& g, const std::vector<long>& c, int v) {
      std::vector<long> around;
      for (int w : g.neighbors[v]) around.push_back(c[w]);
      std::sort(around.begin(), around.end());
      return Sig{c[v], std::move(around)};
    };
    std::vector<Sig> sa, sb;
    for (int v = 0; v < a.n; ++v) sa.push_back(signature(a, ca, v));
    for (int v = 0; v < b.n; ++v) sb.push_back(signature(b, cb, v));
    for (const auto& s : sa) rank.emplace(s, 0);
    for (const auto& s : sb) rank.emplace(s, 0);
    long next = 0;
    for (auto& [s, r] : rank) r = next++;
    for (int v = 0; v < a.n; ++v) ca[v] = rank[sa[v]];
    for (int v = 0; v < b.n; ++v) cb[v] = rank[sb[v]];
    if (next == count) return;
    count = next;
  }
}

class Matcher {
 public:
  Matcher(const Dense& a, const Dense& b, std::vector<long> ca, std::vector<long> cb, std::uint64_t limit)
      : a_(a), b_(b), limit_(limit) {
    if (a.n != b.n) return;
    const std::vector<long> initial_b = cb;
    refine_jointly(a, b, ca, cb);
    std::vector<long> sa(ca), sb(cb);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return;
    ca_ = std::move(ca);
    cb_ = std::move(cb);
    feasible_ = true;

    // Twin classes of b: same initial colour and same open neighbourhood.
    std::map<std::pair<long, std::vector<int>>, int> classes;
    twin_.resize(b.n);
    for (int v = 0; v < b.n; ++v) {
      std::vector<int> around = b.neighbors[v];
      std::sort(around.begin(), around.end());
      twin_[v] = classes.emplace(std::pair{initial_b[v], std::move(around)}, static_cast<int>(classes.size()))
                     .first->second;
    }

    // Matching order: most already-ordered neighbours first, then rarer
    // colours, then higher degree.
    std::map<long, int> freq;
    for (long c : ca_) ++freq[c];
    std::vector<char> placed(a.n, 0);
    std::vector<int> ordered_neighbors(a.n, 0);
    for (int step = 0; step < a.n; ++step) {
      int pick = -1;
      for (int v = 0; v < a.n; ++v) {
        if (placed[v]) continue;
        if (pick < 0) {
          pick = v;
          continue;
        }
        auto rank = [&](int x) {
          return std::tuple{-ordered_neighbors[x], freq[ca_[x]], -static_cast<int>(a.neighbors[x].size())};
        };
        if (rank(v) < rank(pick)) pick = v;
      }
      placed[pick] = 1;
      order_.push_back(pick);
      for (int w : a.neighbors[pick]) ++ordered_neighbors[w];
    }
  }

  std::uint64_t run() {
    if (!feasible_) return 0;
    image_.assign(a_.n, -1);
    used_.assign(b_.n, 0);
    return extend(0);
  }

 private:
  bool consistent(int x, int y, int depth) const {
    if (ca_[x] != cb_[y] || used_[y]) return false;
    for (int i = 0; i < depth; ++i) {
      const int x2 = order_[i];
      if (a_.adj[x][x2] != b_.adj[y][image_[x2]]) return false;
    }
    return true;
  }

  std::uint64_t extend(int depth) {
    if (depth == a_.n) return 1;
    const int x = order_[depth];
    std::uint64_t total = 0;
    std::vector<int> done_classes;
    for (int y = 0; y < b_.n; ++y) {
      if (!consistent(x, y, depth)) continue;
      if (std::find(done_classes.begin(), done_classes.end(), twin_[y]) != done_classes.end()) continue;
      done_classes.push_back(twin_[y]);
      std::uint64_t copies = 0;
      for (int y2 = y; y2 < b_.n; ++y2)
        if (twin_[y2] == twin_[y] && consistent(x, y2, depth)) ++copies;
      image_[x] = y;
      used_[y] = 1;
      const std::uint64_t sub = extend(depth + 1);
      used_[y] = 0;
      image_[x] = -1;
      // Saturating: counts are only needed up to the limit.
      std::uint64_t add = 0;
      if (__builtin_mul_overflow(sub, copies, &add) || __builtin_add_overflow(total, add, &total)) total = UINT64_MAX;
      if (total >= limit_) return limit_;
    }
    return total;
  }

  const Dense& a_;
  const Dense& b_;
  std::uint64_t limit_;
  bool feasible_ = false;
  std::vector<long> ca_, cb_;
  std::vector<int> twin_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<char> used_;
};

std::vector<long> initial_colors(const SimpleGraph& g, const std::vector<int>& pins) {
  std::vector<long> c(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) c[v] = pins.empty() || pins[v] == kUnpinned ? -1 : pins[v];
  return c;
}

}  // namespace

bool pinned_isomorphic(const SimpleGraph& h1, const std::vector<int>& pins1, const SimpleGraph& h2,
                       const std::vector<int>& pins2) {
  auto labels = [](const SimpleGraph& h, const std::vector<int>& pins) {
    if (static_cast<int>(pins.size()) != h.vertex_count()) throw InputError("pin list length differs from vertex count");
    std::vector<int> out;
    for (int p : pins)
      if (p != kUnpinned) out.push_back(p);
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw InputError("pin labels must be distinct");
    return out;
  };
  if (labels(h1, pins1) != labels(h2, pins2)) throw InputError("pin label sets differ");
  if (h1.vertex_count() != h2.vertex_count() || h1.edge_count() != h2.edge_count()) return false;
  const Dense a(h1), b(h2);
  return Matcher(a, b, initial_colors(h1, pins1), initial_colors(h2, pins2), 1).run() > 0;
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto degrees = [](const SimpleGraph& g) {
    std::vector<int> out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) out[v] = g.degree(v);
    std::sort(out.begin(), out.end());
    return out;
  };
  if (degrees(a) != degrees(b)) return false;
  const Dense da(a), db(b);
  return Matcher(da, db, initial_colors(a, {}), initial_colors(b, {}), 1).run() > 0;
}

SimpleGraph gadget_transform(const SimpleGraph& h, const std::vector<int>& pins, int k) {
  std::vector<std::pair<int, int>> pinned;  // (label, vertex)
  for (int v = 0; v < h.vertex_count(); ++v)
    if (!pins.empty() && pins[v] != kUnpinned) pinned.emplace_back(pins[v], v);
  std::sort(pinned.begin(), pinned.end());
  const int t = static_cast<int>(pinned.size());
  SimpleGraph out(h.vertex_count() + k * t * (t + 1) / 2);
  for (const auto& [u, v] : h.edges()) out.add_edge(u, v);
  int next = h.vertex_count();
  for (int i = 0; i < t; ++i)
    for (int c = 0; c < (i + 1) * k; ++c) out.add_edge(pinned[i].second, next++);
  return out;
}

std::uint64_t automorphism_count(const SimpleGraph& h) {
  const Dense d(h);
  const std::uint64_t count = Matcher(d, d, initial_colors(h, {}), initial_colors(h, {}), UINT64_MAX).run();
  if (count == UINT64_MAX) throw InputError("automorphism group too large to count");
  return count;
}

}  // namespace surfcount
