#include "surfcount/dp_engine.hpp"

#include <algorithm>
#include <string>

#include "surfcount/errors.hpp"

namespace surfcount {

std::size_t EntryKeyHash::operator()(const EntryKey& k) const {
  std::uint64_t h = 1469598103934665603ull ^ k.colors;
  auto mix = [&](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::uint64_t>(k.graph.n));
  for (int v = 0; v < k.graph.n; ++v)
    mix((std::uint64_t{k.graph.adj[v]} << 16) | static_cast<std::uint16_t>(k.pins[v]));
  return static_cast<std::size_t>(h);
}

EntryKey entry_key(const TableEntry& entry) { return {entry.graph, entry.pins, entry.colors}; }

int DpTable::find(const EntryKey& key) const {
  const auto it = index.find(key);
  return it == index.end() ? -1 : it->second;
}

void DpStats::add(const DpStats& other) {
  pairs_examined += other.pairs_examined;
  combinations += other.combinations;
  entries_created += other.entries_created;
  max_table_size = std::max(max_table_size, other.max_table_size);
}

namespace {

using Mask = std::uint32_t;

// Vertex sets of the components of g, as bit masks.
std::vector<Mask> component_masks(const SmallGraph& g) {
  std::vector<Mask> out;
  Mask seen = 0;
  for (int s = 0; s < g.n; ++s) {
    if ((seen >> s) & 1u) continue;
    Mask comp = 1u << s, frontier = comp;
    while (frontier != 0) {
      const int v = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      const Mask fresh = g.adj[v] & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

SmallGraph restrict_to(const SmallGraph& g, Mask keep) {
  std::array<int, kMaxSmallVertices> local{};
  SmallGraph out;
  for (int v = 0; v < g.n; ++v)
    if ((keep >> v) & 1u) local[v] = out.add_vertex();
  for (int v = 0; v < g.n; ++v) {
    if (!((keep >> v) & 1u)) continue;
    for (Mask rest = g.adj[v] & keep; rest != 0; rest &= rest - 1) {
      const int u = __builtin_ctz(rest);
      if (u > v) out.add_edge(local[v], local[u]);
    }
  }
  return out;
}

SmallGraph unpinned_form(const SmallGraph& g) { return canonical_labeling(g, no_pins()).form.graph; }

// Canonicalises entry.graph / entry.pins in place.
void canonicalize(TableEntry& entry) {
  CanonicalLabeling lab = canonical_labeling(entry.graph, entry.pins);
  entry.graph = lab.form.graph;
  entry.pins = lab.form.pins;
}

// Adds `entry` (canonical) to `table`, merging with an equivalent entry.
// Returns the entry index, or -1 if the key is pruned.
int insert(DpTable& table, TableEntry&& entry, const PatternFilter* filter, bool track_provenance,
           std::pair<int, int> origin, DpStats* stats) {
  EntryKey key = entry_key(entry);
  const auto [it, fresh] = table.index.try_emplace(std::move(key), -1);
  if (fresh) {
    if (filter != nullptr && !filter->admits(entry.graph, entry.pins)) return -1;
    it->second = static_cast<int>(table.entries.size());
    table.entries.push_back(std::move(entry));
    if (track_provenance) table.provenance.emplace_back();
    if (stats != nullptr) ++stats->entries_created;
  } else {
    if (it->second < 0) return -1;
    table.entries[it->second].count += entry.count;
  }
  if (track_provenance) table.provenance[it->second].push_back(origin);
  return it->second;
}

int index_in(const std::vector<VertexId>& sorted, VertexId v) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  return it != sorted.end() && *it == v ? static_cast<int>(it - sorted.begin()) : -1;
}

}  // namespace

// ---------------------------------------------------------------------------

PatternFilter::PatternFilter(const SimpleGraph& pattern) : pattern_(to_small(pattern)) {
  for (Mask comp : component_masks(pattern_)) {
    const SmallGraph form = unpinned_form(restrict_to(pattern_, comp));
    CanonicalForm cf{form, no_pins()};
    const auto it = std::find(component_forms_.begin(), component_forms_.end(), cf);
    if (it == component_forms_.end()) {
      component_forms_.push_back(cf);
      component_multiplicity_.push_back(1);
    } else {
      ++component_multiplicity_[it - component_forms_.begin()];
    }
  }
}

bool PatternFilter::embeds(const SmallGraph& h) const {
  if (h.n > pattern_.n) return false;
  if (h.n == 0) return true;
  const EntryKey key{h, no_pins(), 0};
  if (const auto it = embed_cache_.find(key); it != embed_cache_.end()) return it->second;

  // Order h's vertices so that each one after the first of its component
  // has an earlier neighbour.
  std::array<int, kMaxSmallVertices> order{};
  int placed = 0;
  Mask done = 0;
  while (placed < h.n) {
    int best = -1;
    for (int v = 0; v < h.n; ++v) {
      if ((done >> v) & 1u) continue;
      const int connected = __builtin_popcount(h.adj[v] & done);
      if (best < 0) {
        best = v;
        continue;
      }
      const int best_connected = __builtin_popcount(h.adj[best] & done);
      if (connected > best_connected || (connected == best_connected && h.degree(v) > h.degree(best))) best = v;
    }
    order[placed++] = best;
    done |= 1u << best;
  }

  std::array<int, kMaxSmallVertices> image{};
  const int pn = pattern_.n;
  auto search = [&](auto&& self, int depth, Mask used) -> bool {
    if (depth == h.n) return true;
    const int v = order[depth];
    Mask cand = ((1u << pn) - 1) & ~used;
    for (int d = 0; d < depth; ++d)
      if (h.has_edge(v, order[d])) cand &= pattern_.adj[image[order[d]]];
    for (; cand != 0; cand &= cand - 1) {
      const int p = __builtin_ctz(cand);
      if (pattern_.degree(p) < h.degree(v)) continue;
      image[v] = p;
      if (self(self, depth + 1, used | (1u << p))) return true;
    }
    return false;
  };
  const bool ok = search(search, 0, 0);
  embed_cache_.emplace(key, ok);
  return ok;
}

bool PatternFilter::admits(const SmallGraph& h, const PinLabels& pins) const {
  if (h.n > pattern_.n || h.edge_count() > pattern_.edge_count()) return false;
  // Unpinned components are finished: they are whole components of the isomorph.
  std::vector<int> used(component_forms_.size(), 0);
  for (Mask comp : component_masks(h)) {
    bool closed = true;
    for (Mask rest = comp; rest != 0 && closed; rest &= rest - 1) closed = pins[__builtin_ctz(rest)] == kUnpinned;
    if (!closed) continue;
    const CanonicalForm cf{unpinned_form(restrict_to(h, comp)), no_pins()};
    const auto it = std::find(component_forms_.begin(), component_forms_.end(), cf);
    if (it == component_forms_.end()) return false;
    const auto i = it - component_forms_.begin();
    if (++used[i] > component_multiplicity_[i]) return false;
  }
  return embeds(h);
}

// ---------------------------------------------------------------------------

DpTable init_leaf_table(VertexId x, VertexId y, const std::vector<VertexId>& mid, const Coloring& coloring, int k,
                        bool induced, const PatternFilter* filter, bool track_provenance) {
  DpTable table;
  const int px = index_in(mid, x), py = index_in(mid, y);
  auto add = [&](bool with_x, bool with_y, bool with_edge) {
    const int size = (with_x ? 1 : 0) + (with_y ? 1 : 0);
    if (size > k) return;
    TableEntry entry;
    entry.count = 1;
    if (with_x) {
      const int v = entry.graph.add_vertex();
      entry.pins[v] = static_cast<std::int16_t>(px);
      entry.colors |= Mask{1} << (coloring.color[x] - 1);
    }
    if (with_y) {
      const int v = entry.graph.add_vertex();
      entry.pins[v] = static_cast<std::int16_t>(py);
      entry.colors |= Mask{1} << (coloring.color[y] - 1);
    }
    if (with_edge) entry.graph.add_edge(0, 1);
    canonicalize(entry);
    insert(table, std::move(entry), filter, track_provenance, {-1, with_edge ? 1 : 0}, nullptr);
  };
  add(false, false, false);
  add(true, false, false);
  add(false, true, false);
  if (!induced) add(true, true, false);
  add(true, true, true);
  return table;
}

bool entries_compatible(const TableEntry& f, const TableEntry& g, const std::vector<VertexId>& mid_f,
                        const std::vector<VertexId>& mid_g) {
  std::vector<bool> in_f(mid_f.size(), false), in_g(mid_g.size(), false);
  for (int v = 0; v < f.graph.n; ++v)
    if (f.pins[v] != kUnpinned) in_f[f.pins[v]] = true;
  for (int v = 0; v < g.graph.n; ++v)
    if (g.pins[v] != kUnpinned) in_g[g.pins[v]] = true;
  for (std::size_t p = 0; p < mid_f.size(); ++p) {
    const int q = index_in(mid_g, mid_f[p]);
    if (q >= 0 && in_f[p] != in_g[q]) return false;
  }
  return true;
}

namespace {

// Index maps shared by every pair of one update step.
struct StepMaps {
  std::vector<int> f_to_e, g_to_e, g_to_f, f_shared, g_shared;
  int shared_count = 0;

  StepMaps(const std::vector<VertexId>& mid_f, const std::vector<VertexId>& mid_g,
           const std::vector<VertexId>& mid_e) {
    for (VertexId v : mid_f) f_to_e.push_back(index_in(mid_e, v));
    for (VertexId v : mid_g) g_to_e.push_back(index_in(mid_e, v));
    f_shared.assign(mid_f.size(), -1);
    for (std::size_t q = 0; q < mid_g.size(); ++q) {
      const int p = index_in(mid_f, mid_g[q]);
      g_to_f.push_back(p);
      if (p >= 0) {
        f_shared[p] = shared_count;
        g_shared.push_back(shared_count++);
      } else {
        g_shared.push_back(-1);
      }
    }
  }
};

// Sorted shared positions pinned by an entry, as a byte string.
std::string shared_signature(const TableEntry& t, const std::vector<int>& shared) {
  std::array<std::uint16_t, kMaxSmallVertices> units{};
  int count = 0;
  for (int v = 0; v < t.graph.n; ++v)
    if (t.pins[v] != kUnpinned && shared[t.pins[v]] >= 0) units[count++] = static_cast<std::uint16_t>(shared[t.pins[v]]);
  std::sort(units.begin(), units.begin() + count);
  std::string sig;
  for (int i = 0; i < count; ++i) {
    sig.push_back(static_cast<char>(units[i] & 0xff));
    sig.push_back(static_cast<char>(units[i] >> 8));
  }
  return sig;
}

// Union of f and g identified along shared pins; false if it exceeds k vertices.
bool combine_into(const TableEntry& f, const TableEntry& g, const StepMaps& maps, int k, TableEntry& out) {
  std::array<int, kMaxSmallVertices> g_local{};
  // f vertex pinned to each mid(f) position, looked up linearly (n <= 16).
  auto f_vertex_at = [&](int p) {
    for (int v = 0; v < f.graph.n; ++v)
      if (f.pins[v] == p) return v;
    return -1;
  };
  int n = f.graph.n;
  for (int v = 0; v < g.graph.n; ++v) {
    const int p = g.pins[v] == kUnpinned ? -1 : maps.g_to_f[g.pins[v]];
    if (p >= 0) {
      g_local[v] = f_vertex_at(p);
      SURFCOUNT_CHECK(g_local[v] >= 0, "combined entries are not compatible");
    } else {
      g_local[v] = n++;
    }
  }
  if (n > k) return false;
  out.graph = f.graph;
  out.graph.n = n;
  out.pins = no_pins();
  for (int v = 0; v < f.graph.n; ++v)
    if (f.pins[v] != kUnpinned) out.pins[v] = static_cast<std::int16_t>(maps.f_to_e[f.pins[v]]);
  for (int v = 0; v < g.graph.n; ++v) {
    const int w = g_local[v];
    if (w >= f.graph.n && g.pins[v] != kUnpinned) out.pins[w] = static_cast<std::int16_t>(maps.g_to_e[g.pins[v]]);
    for (std::uint32_t rest = g.graph.adj[v]; rest != 0; rest &= rest - 1) {
      const int u = __builtin_ctz(rest);
      if (u > v) out.graph.add_edge(w, g_local[u]);
    }
  }
  out.colors = f.colors | g.colors;
  out.count = f.count * g.count;
  return true;
}

}  // namespace

TableEntry combine(const TableEntry& f, const TableEntry& g, const std::vector<VertexId>& mid_f,
                   const std::vector<VertexId>& mid_g, const std::vector<VertexId>& mid_e) {
  SURFCOUNT_CHECK(entries_compatible(f, g, mid_f, mid_g), "combining incompatible entries");
  const StepMaps maps(mid_f, mid_g, mid_e);
  TableEntry out;
  const bool fits = combine_into(f, g, maps, kMaxSmallVertices, out);
  SURFCOUNT_CHECK(fits, "combined graph exceeds the small-graph bound");
  return out;
}

bool entries_equivalent(const TableEntry& a, const TableEntry& b) {
  if (a.graph.n != b.graph.n || a.colors != b.colors) return false;
  if (a.graph.edge_count() != b.graph.edge_count()) return false;
  std::vector<int> pa(a.graph.n), pb(b.graph.n);
  std::vector<int> deg_a, deg_b;
  for (int v = 0; v < a.graph.n; ++v) {
    pa[v] = a.pins[v];
    pb[v] = b.pins[v];
  }
  std::vector<int> la, lb;
  for (int v = 0; v < a.graph.n; ++v)
    if (pa[v] != kUnpinned) la.push_back(pa[v]);
  for (int v = 0; v < b.graph.n; ++v)
    if (pb[v] != kUnpinned) lb.push_back(pb[v]);
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb) return false;
  for (int v = 0; v < a.graph.n; ++v) {
    if (pa[v] == kUnpinned) continue;
    for (int u = 0; u < b.graph.n; ++u)
      if (pb[u] == pa[v] && a.graph.degree(v) != b.graph.degree(u)) return false;
  }
  return pinned_isomorphic(to_simple(a.graph), pa, to_simple(b.graph), pb);
}

DpTable update_step(const DpTable& f, const DpTable& g, const std::vector<VertexId>& mid_f,
                    const std::vector<VertexId>& mid_g, const std::vector<VertexId>& mid_e, int k,
                    const PatternFilter* filter, bool track_provenance, DpStats* stats) {
  const StepMaps maps(mid_f, mid_g, mid_e);
  std::unordered_map<std::string, std::vector<int>> g_groups;
  for (int b = 0; b < static_cast<int>(g.entries.size()); ++b)
    g_groups[shared_signature(g.entries[b], maps.g_shared)].push_back(b);

  DpTable out;
  TableEntry scratch;
  for (int a = 0; a < static_cast<int>(f.entries.size()); ++a) {
    const TableEntry& tf = f.entries[a];
    const auto it = g_groups.find(shared_signature(tf, maps.f_shared));
    if (it == g_groups.end()) continue;
    for (int b : it->second) {
      if (stats != nullptr) ++stats->pairs_examined;
      if (!combine_into(tf, g.entries[b], maps, k, scratch)) continue;
      if (stats != nullptr) ++stats->combinations;
      canonicalize(scratch);
      insert(out, std::move(scratch), filter, track_provenance, {a, b}, stats);
      scratch = TableEntry{};
    }
  }
  if (stats != nullptr) stats->max_table_size = std::max(stats->max_table_size, out.entries.size());
  return out;
}

// ---------------------------------------------------------------------------

DpRun::DpRun(const SimpleGraph& host, const BranchDecomposition& bd, const Coloring& coloring,
             const SimpleGraph& pattern, DpOptions options)
    : host_(host), coloring_(coloring), pattern_(pattern), options_(options) {
  for (VertexId v = 0; v < pattern.vertex_count(); ++v)
    if (pattern.degree(v) == 0) throw InputError("pattern has an isolated vertex");
  const int k = pattern.vertex_count();
  if (k > kMaxSmallVertices) throw InputError("pattern has more than 16 vertices");
  if (coloring.q < 1 || coloring.q > 32) throw InputError("colour count out of range");
  if (static_cast<int>(coloring.color.size()) < host.vertex_count()) throw InputError("colouring is not total");
  if (options_.track_provenance) options_.keep_tables = true;
  if (options_.prune) filter_ = std::make_unique<PatternFilter>(pattern);

  if (bd.empty()) {
    empty_ = true;
    return;
  }
  if (bd.degenerate()) {
    bd.validate(host.edge_count());
    degenerate_ = true;
    bd_ = bd;
    const auto [x, y] = host.edge(bd.node(0).edge);
    tables_.push_back(init_leaf_table(x, y, {}, coloring_, k, options_.induced, filter_.get(),
                                      options_.track_provenance));
    stats_.max_table_size = tables_[0].entries.size();
    return;
  }
  bd_ = bd.is_rooted() ? bd : root(bd);
  mids_ = compute_middle_sets(bd_, host.vertex_count(), host.edges());
  view_ = rooted_view(bd_);
  root_edge_ = view_.root_edge;
  tables_.resize(bd_.tree_edge_count());
  for (int t : view_.post_order) {
    const auto [c0, c1] = view_.children[t];
    if (c0 < 0) {
      const auto [x, y] = host.edge(bd_.node(view_.lower_node[t]).edge);
      tables_[t] = init_leaf_table(x, y, mids_.mid[t], coloring_, k, options_.induced, filter_.get(),
                                   options_.track_provenance);
      stats_.max_table_size = std::max(stats_.max_table_size, tables_[t].entries.size());
    } else {
      tables_[t] = update_step(tables_[c0], tables_[c1], mids_.mid[c0], mids_.mid[c1], mids_.mid[t], k,
                               filter_.get(), options_.track_provenance, &stats_);
      if (!options_.keep_tables) {
        tables_[c0] = DpTable();
        tables_[c1] = DpTable();
      }
    }
  }
}

const DpTable& DpRun::root_table() const { return degenerate_ ? tables_[0] : tables_[root_edge_]; }

int DpRun::root_entry(const SimpleGraph& target) const {
  if (empty_) return -1;
  if (target.vertex_count() > pattern_.vertex_count()) return -1;
  const SmallGraph form = unpinned_form(to_small(target));
  const Mask full = coloring_.q == 32 ? ~Mask{0} : ((Mask{1} << coloring_.q) - 1);
  return root_table().find({form, no_pins(), full});
}

Count DpRun::readout(const SimpleGraph& target) const {
  if (target.vertex_count() == 0) return 1;
  const int i = root_entry(target);
  return i < 0 ? Count(0) : root_table().entries[i].count;
}

IsomorphList::ListId DpRun::generate(const SimpleGraph& target, IsomorphList& store,
                                     const std::vector<EdgeId>* edge_map) const {
  SURFCOUNT_CHECK(options_.track_provenance, "listing needs provenance");
  const IsomorphList::ListId result = store.create();
  const int r = root_entry(target);
  if (r < 0) return result;
  auto host_edge = [&](EdgeId e) { return edge_map != nullptr ? (*edge_map)[e] : e; };

  if (degenerate_) {
    for (const auto& [unused, with_edge] : tables_[0].provenance[r])
      if (with_edge != 0) store.append_subgraph(result, {host_edge(bd_.node(0).edge)});
    return result;
  }

  // Top-down: entries that contribute to the root entry.
  const int te = bd_.tree_edge_count();
  std::vector<std::vector<char>> marked(te);
  for (int t = 0; t < te; ++t) marked[t].assign(tables_[t].entries.size(), 0);
  marked[root_edge_][r] = 1;
  for (auto it = view_.post_order.rbegin(); it != view_.post_order.rend(); ++it) {
    const int t = *it;
    const auto [c0, c1] = view_.children[t];
    if (c0 < 0) continue;
    for (std::size_t i = 0; i < marked[t].size(); ++i) {
      if (!marked[t][i]) continue;
      store.add_operations(1);
      for (const auto& [a, b] : tables_[t].provenance[i]) {
        marked[c0][a] = 1;
        marked[c1][b] = 1;
      }
    }
  }

  // Bottom-up: lists for marked entries. Edgeless entries stand for one
  // empty subgraph and are represented by -1.
  std::vector<std::vector<IsomorphList::ListId>> lists(te);
  std::vector<std::vector<EdgeId>> left;
  for (int t : view_.post_order) {
    const DpTable& table = tables_[t];
    lists[t].assign(table.entries.size(), -1);
    const auto [c0, c1] = view_.children[t];
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
      if (!marked[t][i]) continue;
      const TableEntry& entry = table.entries[i];
      if (entry.graph.edge_count() == 0) {
        SURFCOUNT_CHECK(entry.count == 1, "edgeless contributing entry with several subgraphs");
        continue;
      }
      const IsomorphList::ListId list = store.create();
      if (c0 < 0) {
        const EdgeId e = host_edge(bd_.node(view_.lower_node[t]).edge);
        for (const auto& [unused, with_edge] : table.provenance[i])
          if (with_edge != 0) store.append_subgraph(list, {e});
      } else {
        for (const auto& [a, b] : table.provenance[i]) {
          const IsomorphList::ListId la = lists[c0][a], lb = lists[c1][b];
          if (la < 0 && lb < 0) continue;
          if (la < 0) {
            store.append_link(list, lb);
          } else if (lb < 0) {
            store.append_link(list, la);
          } else {
            left.clear();
            store.visit(la, [&](const std::vector<EdgeId>& s) { left.push_back(s); });
            store.visit(lb, [&](const std::vector<EdgeId>& s) {
              for (const auto& l : left) {
                std::vector<EdgeId> merged(l.size() + s.size());
                std::merge(l.begin(), l.end(), s.begin(), s.end(), merged.begin());
                store.append_subgraph(list, std::move(merged));
              }
            });
          }
        }
      }
      lists[t][i] = store.seal(list);
    }
  }
  const IsomorphList::ListId root_list = lists[root_edge_][r];
  if (root_list >= 0) store.append_link(result, root_list);
  return store.seal(result);
}

Count count_colorful(const SimpleGraph& host, const BranchDecomposition& bd, const Coloring& coloring,
                     const SimpleGraph& pattern, bool induced, bool prune, DpStats* stats) {
  DpOptions options;
  options.induced = induced;
  options.prune = prune;
  const DpRun run(host, bd, coloring, pattern, options);
  if (stats != nullptr) stats->add(run.stats());
  return run.readout(pattern);
}

}  // namespace surfcount
