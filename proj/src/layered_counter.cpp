#include "surfcount/layered_counter.hpp"

#include <algorithm>

#include "surfcount/errors.hpp"
#include "surfcount/isomorph_list.hpp"
#include "surfcount/isomorphism.hpp"

namespace surfcount {

PatternGraph::PatternGraph(const SimpleGraph& pattern) : pattern_(pattern) {
  std::vector<VertexId> kept;
  for (const auto& comp : connected_components(pattern)) {
    if (comp.size() == 1) {
      ++isolated_;
    } else {
      kept.insert(kept.end(), comp.begin(), comp.end());
    }
  }
  std::sort(kept.begin(), kept.end());
  stripped_ = induced_subgraph(pattern, kept);
  if (stripped_.vertex_count() > kMaxSmallVertices)
    throw InputError("pattern has more than " + std::to_string(kMaxSmallVertices) + " non-isolated vertices");

  components_ = connected_components(stripped_);
  std::vector<CanonicalForm> forms;
  std::vector<std::vector<int>> members;  // per type, its components
  for (const auto& comp : components_) {
    const CanonicalForm form = canonical_labeling(to_small(induced_subgraph(stripped_, comp)), no_pins()).form;
    const auto it = std::find(forms.begin(), forms.end(), form);
    const int type = static_cast<int>(it - forms.begin());
    if (it == forms.end()) {
      forms.push_back(form);
      members.emplace_back();
    }
    type_of_.push_back(type);
    members[type].push_back(static_cast<int>(type_of_.size()) - 1);
  }
  for (const auto& m : members) multiplicity_.push_back(static_cast<int>(m.size()));

  int subsets = 1;
  for (int m : multiplicity_) subsets *= m + 1;
  for (int s = 0; s < subsets; ++s) {
    const std::vector<int> take = copies(s);
    std::vector<VertexId> vertices;
    for (int t = 0; t < type_count(); ++t)
      for (int c = 0; c < take[t]; ++c)
        vertices.insert(vertices.end(), components_[members[t][c]].begin(), components_[members[t][c]].end());
    std::sort(vertices.begin(), vertices.end());
    subpatterns_.push_back(induced_subgraph(stripped_, vertices));
  }
  splits_.resize(subsets);
  for (int s = 0; s < subsets; ++s) {
    const std::vector<int> whole = copies(s);
    for (int s2 = 1; s2 < subsets; ++s2) {
      const std::vector<int> part = copies(s2);
      std::vector<int> rest(type_count());
      bool fits = true;
      for (int t = 0; t < type_count() && fits; ++t) {
        rest[t] = whole[t] - part[t];
        fits = rest[t] >= 0;
      }
      if (fits) splits_[s].emplace_back(index_of(rest), s2);
    }
  }
}

std::vector<int> PatternGraph::copies(int s) const {
  std::vector<int> out(type_count());
  for (int t = 0; t < type_count(); ++t) {
    out[t] = s % (multiplicity_[t] + 1);
    s /= multiplicity_[t] + 1;
  }
  return out;
}

int PatternGraph::index_of(const std::vector<int>& copies) const {
  int s = 0, stride = 1;
  for (int t = 0; t < type_count(); ++t) {
    s += copies[t] * stride;
    stride *= multiplicity_[t] + 1;
  }
  return s;
}

Coloring layer_coloring(const std::vector<int>& layer_of, int i, int j) {
  Coloring c{std::vector<int>(layer_of.size(), 1), j - i + 1};
  for (std::size_t v = 0; v < layer_of.size(); ++v)
    if (layer_of[v] >= 0) c.color[v] = layer_of[v] - i + 1;
  return c;
}

Window build_window(const LayeredMap& layered, int i, int j) {
  Window w{build_layer_graph(layered, i, j), SimpleGraph(), {}, {}};
  const Map& local = w.graph.map;
  std::vector<std::array<VertexId, 2>> edges;
  for (EdgeId e = 0; e < w.graph.window_edge_count; ++e) {
    const auto [u, v] = local.ends(e);
    edges.push_back({u, v});
  }
  w.host = SimpleGraph(local.vertex_count(), edges);
  if (!edges.empty()) w.bd = restrict_decomposition(build_ssd(local, w.graph.apex), w.graph.window_edge_count);
  w.coloring = layer_coloring(w.graph.layer_of, i, j);
  return w;
}

Count dpc(const Map& map, VertexId r, int i, int j, const SimpleGraph& pattern_s, bool induced) {
  const LayeredMap layered = prepare_layers(map, r);
  if (i < 0 || j < i || j > layered.layers.depth()) return 0;
  const Window w = build_window(layered, i, j);
  if (w.host.edge_count() == 0) return 0;
  return count_colorful(w.host, w.bd, w.coloring, pattern_s, induced);
}

// ---------------------------------------------------------------------------

CountGrid::CountGrid(int depth, int k, int subsets)
    : depth_(depth),
      k_(k),
      subsets_(subsets),
      dpc_(static_cast<std::size_t>(depth + 1) * k * subsets),
      dpt_(static_cast<std::size_t>(depth + 1) * subsets) {}

Count CountGrid::dpc(int i, int j, int s) const {
  if (s == 0 || i < 0 || j < i || j - i >= k_ || j > depth_) return 0;
  return dpc_[(static_cast<std::size_t>(j) * k_ + (j - i)) * subsets_ + s];
}

Count CountGrid::dpt(int j, int s) const {
  if (s == 0) return 1;
  if (j < 0) return 0;
  return dpt_[static_cast<std::size_t>(std::min(j, depth_)) * subsets_ + s];
}

void CountGrid::set_dpc(int i, int j, int s, Count value) {
  dpc_[(static_cast<std::size_t>(j) * k_ + (j - i)) * subsets_ + s] = std::move(value);
}

void CountGrid::set_dpt(int j, int s, Count value) {
  dpt_[static_cast<std::size_t>(j) * subsets_ + s] = std::move(value);
}

namespace {

// Sub-patterns that can be colourful in a window of x layers.
bool window_needed(const PatternGraph& pattern, int x) {
  for (int s = 1; s < pattern.subset_count(); ++s)
    if (pattern.sub(s).vertex_count() >= x) return true;
  return false;
}

Count binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  Count out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

void require_simple(const Map& map) {
  if (!map.is_simple()) throw InputError("host map must be simple (no loops or parallel edges)");
}

}  // namespace

CountGrid dpt_all(const Map& map, const PatternGraph& pattern, bool induced, const CounterOptions& options,
                  CounterStats* stats) {
  const LayeredMap layered = prepare_layers(map, options.root);
  const int d = layered.layers.depth();
  const int k = std::max(1, pattern.k());
  CountGrid grid(d, k, pattern.subset_count());
  CounterStats local;
  local.depth = d;

  for (int j = 0; j <= d; ++j) {
    for (int x = 1; x <= std::min(k, j + 1); ++x) {
      if (!window_needed(pattern, x)) continue;
      const int i = j - x + 1;
      const Window w = build_window(layered, i, j);
      ++local.windows;
      if (w.host.edge_count() == 0) continue;
      DpOptions dp_options;
      dp_options.induced = induced;
      dp_options.prune = options.prune;
      const DpRun run(w.host, w.bd, w.coloring, pattern.stripped(), dp_options);
      local.dp.add(run.stats());
      for (int s = 1; s < pattern.subset_count(); ++s)
        if (pattern.sub(s).vertex_count() >= x) grid.set_dpc(i, j, s, run.readout(pattern.sub(s)));
    }
    for (int s = 1; s < pattern.subset_count(); ++s) {
      Count value = grid.dpt(j - 1, s);
      for (const auto& [s1, s2] : pattern.splits(s)) {
        for (int x = 1; x <= k; ++x) {
          ++local.grid_terms;
          const Count c = grid.dpc(j - x + 1, j, s2);
          if (c != 0) value += grid.dpt(j - x - 1, s1) * c;
        }
      }
      grid.set_dpt(j, s, std::move(value));
    }
  }
  if (stats != nullptr) *stats = local;
  return grid;
}

Count count_isomorphs(const Map& map, const SimpleGraph& pattern, bool induced, const CounterOptions& options,
                      CounterStats* stats) {
  if (pattern.vertex_count() == 0) return 1;
  const PatternGraph pg(pattern);
  if (induced && pg.isolated() > 0) throw InputError("isolated-vertex pattern unsupported in induced mode");
  require_simple(map);
  const int n = map.vertex_count();
  if (pattern.vertex_count() > n) return 0;
  if (pg.k() == 0) return binomial(n, pg.isolated());
  const CountGrid grid = dpt_all(map, pg, induced, options, stats);
  return grid.dpt(grid.depth(), pg.full()) * binomial(n - pg.k(), pg.isolated());
}

std::vector<Subgraph> list_isomorphs(const Map& map, const SimpleGraph& pattern, bool induced, std::uint64_t limit,
                                     const CounterOptions& options, ListingStats* stats) {
  const PatternGraph pg(pattern);
  if (pg.isolated() > 0) throw InputError("isolated-vertex pattern unsupported in listing");
  require_simple(map);
  ListingStats local;
  if (pattern.vertex_count() == 0) {
    if (stats != nullptr) *stats = local;
    return {Subgraph{}};
  }
  if (pattern.vertex_count() > map.vertex_count()) {
    if (stats != nullptr) *stats = local;
    return {};
  }

  // Counting stage.
  const CountGrid grid = dpt_all(map, pg, induced, options, &local.counting);
  const int d = grid.depth(), k = grid.k(), subsets = pg.subset_count();

  // Backtracking stage.
  std::vector<std::vector<char>> ct(d + 1, std::vector<char>(subsets, 0));
  std::vector<std::vector<std::vector<char>>> cc(d + 1, std::vector<std::vector<char>>(k, std::vector<char>(subsets, 0)));
  ct[d][pg.full()] = grid.dpt(d, pg.full()) != 0;
  for (int j = d; j >= 0; --j) {
    for (int s = 1; s < subsets; ++s) {
      if (!ct[j][s]) continue;
      if (j >= 1 && grid.dpt(j - 1, s) != 0) ct[j - 1][s] = 1;
      for (const auto& [s1, s2] : pg.splits(s))
        for (int x = 1; x <= k; ++x) {
          if (grid.dpc(j - x + 1, j, s2) == 0 || grid.dpt(j - x - 1, s1) == 0) continue;
          if (s1 != 0) ct[j - x - 1][s1] = 1;
          cc[j][x - 1][s2] = 1;
        }
    }
  }

  // Generation stage: LC lists from re-run windows, then LT lists.
  IsomorphList store;
  const LayeredMap layered = prepare_layers(map, options.root);
  std::vector<std::vector<std::vector<IsomorphList::ListId>>> lc(
      d + 1, std::vector<std::vector<IsomorphList::ListId>>(k, std::vector<IsomorphList::ListId>(subsets, -1)));
  for (int j = 0; j <= d; ++j) {
    for (int x = 1; x <= k; ++x) {
      if (std::find(cc[j][x - 1].begin(), cc[j][x - 1].end(), 1) == cc[j][x - 1].end()) continue;
      const Window w = build_window(layered, j - x + 1, j);
      DpOptions dp_options;
      dp_options.induced = induced;
      dp_options.prune = options.prune;
      dp_options.track_provenance = true;
      const DpRun run(w.host, w.bd, w.coloring, pg.stripped(), dp_options);
      for (int s = 1; s < subsets; ++s)
        if (cc[j][x - 1][s]) lc[j][x - 1][s] = run.generate(pg.sub(s), store, &w.graph.host_edge);
    }
  }

  std::vector<std::vector<IsomorphList::ListId>> lt(d + 1, std::vector<IsomorphList::ListId>(subsets, -1));
  std::vector<std::vector<EdgeId>> left;
  for (int j = 0; j <= d; ++j) {
    for (int s = 1; s < subsets; ++s) {
      if (!ct[j][s]) continue;
      const IsomorphList::ListId list = store.create();
      if (j >= 1 && grid.dpt(j - 1, s) != 0) store.append_link(list, lt[j - 1][s]);
      for (const auto& [s1, s2] : pg.splits(s))
        for (int x = 1; x <= k; ++x) {
          if (grid.dpc(j - x + 1, j, s2) == 0 || grid.dpt(j - x - 1, s1) == 0) continue;
          const IsomorphList::ListId part = lc[j][x - 1][s2];
          SURFCOUNT_CHECK(part >= 0, "missing colourful list");
          if (s1 == 0) {
            store.append_link(list, part);
            continue;
          }
          const IsomorphList::ListId below = lt[j - x - 1][s1];
          SURFCOUNT_CHECK(below >= 0, "missing layered list");
          left.clear();
          store.visit(below, [&](const std::vector<EdgeId>& a) { left.push_back(a); });
          store.visit(part, [&](const std::vector<EdgeId>& b) {
            for (const auto& a : left) {
              std::vector<EdgeId> merged(a.size() + b.size());
              std::merge(a.begin(), a.end(), b.begin(), b.end(), merged.begin());
              store.append_subgraph(list, std::move(merged));
            }
          });
        }
      lt[j][s] = store.seal(list);
    }
  }

  std::vector<Subgraph> out;
  if (ct[d][pg.full()]) {
    store.visit(lt[d][pg.full()], [&](const std::vector<EdgeId>& edges) {
      Subgraph sub;
      sub.edges = edges;
      for (EdgeId e : edges) {
        const auto [u, v] = map.ends(e);
        sub.vertices.push_back(u);
        sub.vertices.push_back(v);
      }
      std::sort(sub.vertices.begin(), sub.vertices.end());
      sub.vertices.erase(std::unique(sub.vertices.begin(), sub.vertices.end()), sub.vertices.end());
      out.push_back(std::move(sub));
      return limit == 0 || out.size() < limit;
    });
  }
  local.generation_ops = store.operations();
  local.listed = out.size();
  if (stats != nullptr) *stats = local;
  return out;
}

}  // namespace surfcount
