#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "surfcount/branch_decomposition.hpp"
#include "surfcount/graph.hpp"
#include "surfcount/isomorph_list.hpp"
#include "surfcount/isomorphism.hpp"

namespace surfcount {

using Count = boost::multiprecision::cpp_int;

/// Vertex colouring with colours 1..q.
struct Coloring {
  std::vector<int> color;
  int q = 1;

  static Coloring uniform(int vertex_count) { return {std::vector<int>(vertex_count, 1), 1}; }
};

/// (H, gamma, A, eta). H is kept in canonical form; pins[v] is the index in
/// the sorted middle set of the host vertex that v stands for, or kUnpinned.
struct TableEntry {
  SmallGraph graph;
  PinLabels pins = no_pins();
  std::uint32_t colors = 0;  // bit c-1 for colour c
  Count count = 0;
};

struct EntryKey {
  SmallGraph graph;
  PinLabels pins;
  std::uint32_t colors;
  friend bool operator==(const EntryKey& a, const EntryKey& b) {
    return a.colors == b.colors && a.graph == b.graph && a.pins == b.pins;
  }
};

struct EntryKeyHash {
  std::size_t operator()(const EntryKey& k) const;
};

/// Canonical key: equal keys iff the entries are equivalent.
EntryKey entry_key(const TableEntry& entry);

/// Pairs (f-entry, g-entry) an entry was merged from; leaf entries hold
/// (-1, 0) for a vertex-only subgraph and (-1, 1) for the edge itself.
using Provenance = std::vector<std::pair<int, int>>;

struct DpTable {
  std::vector<TableEntry> entries;
  std::vector<Provenance> provenance;  // filled only when tracked
  std::unordered_map<EntryKey, int, EntryKeyHash> index;  // -1 marks a pruned key

  int find(const EntryKey& key) const;
};

/// Necessary conditions for a partial subgraph H to extend to an isomorph
/// of the pattern: H must be a subgraph of P, and every component of H that
/// no longer touches the middle set must be a component of P.
class PatternFilter {
 public:
  explicit PatternFilter(const SimpleGraph& pattern);
  int k() const { return pattern_.n; }
  bool admits(const SmallGraph& h, const PinLabels& pins) const;
  bool embeds(const SmallGraph& h) const;

 private:
  SmallGraph pattern_;
  std::vector<CanonicalForm> component_forms_;
  std::vector<int> component_multiplicity_;
  mutable std::unordered_map<EntryKey, bool, EntryKeyHash> embed_cache_;
};

struct DpOptions {
  bool induced = false;
  bool prune = true;
  bool track_provenance = false;
  bool keep_tables = false;
};

struct DpStats {
  std::uint64_t pairs_examined = 0;
  std::uint64_t combinations = 0;
  std::uint64_t entries_created = 0;
  std::size_t max_table_size = 0;
  std::uint64_t work() const { return pairs_examined + combinations + entries_created; }
  void add(const DpStats& other);
};

/// Leaf table for host edge xy. Plain mode enumerates the empty graph, {x},
/// {y}, {x, y} without the edge, and the edge; induced mode drops the
/// edgeless pair. Subgraphs with more than k vertices are skipped.
/// `filter` (optional) prunes entries that cannot extend.
DpTable init_leaf_table(VertexId x, VertexId y, const std::vector<VertexId>& mid, const Coloring& coloring, int k,
                        bool induced, const PatternFilter* filter = nullptr, bool track_provenance = false);

/// Nil patterns agree on mid(f) ∩ mid(g).
bool entries_compatible(const TableEntry& f, const TableEntry& g, const std::vector<VertexId>& mid_f,
                        const std::vector<VertexId>& mid_g);

/// Identifies the shared pinned vertices and relabels pins over mid(e).
/// The result is not canonicalised and may exceed k vertices.
TableEntry combine(const TableEntry& f, const TableEntry& g, const std::vector<VertexId>& mid_f,
                   const std::vector<VertexId>& mid_g, const std::vector<VertexId>& mid_e);

/// Quick rejections (sizes, nil patterns, pinned degrees, colours), then a
/// pinned isomorphism search.
bool entries_equivalent(const TableEntry& a, const TableEntry& b);

/// Combines every compatible pair, drops results above k vertices, merges
/// equivalent results.
DpTable update_step(const DpTable& f, const DpTable& g, const std::vector<VertexId>& mid_f,
                    const std::vector<VertexId>& mid_g, const std::vector<VertexId>& mid_e, int k,
                    const PatternFilter* filter, bool track_provenance, DpStats* stats = nullptr);

/// A full bottom-up run over a rooted (or degenerate) decomposition of a
/// host graph. Host edge ids are the leaves' edge ids.
class DpRun {
 public:
  DpRun(const SimpleGraph& host, const BranchDecomposition& bd, const Coloring& coloring, const SimpleGraph& pattern,
        DpOptions options);

  /// Number of colourful subgraphs isomorphic to `target` (a subgraph of
  /// the pattern the run was built for).
  Count readout(const SimpleGraph& target) const;

  /// The root entry for `target`, or -1.
  int root_entry(const SimpleGraph& target) const;

  /// Lists the subgraphs counted by readout(target) into `store`, returning
  /// the list id. Requires track_provenance. `edge_map` translates the
  /// host's edge ids (identity when null).
  IsomorphList::ListId generate(const SimpleGraph& target, IsomorphList& store,
                                const std::vector<EdgeId>* edge_map = nullptr) const;

  const DpStats& stats() const { return stats_; }
  const MiddleSetAnnotation& middle_sets() const { return mids_; }
  const BranchDecomposition& decomposition() const { return bd_; }
  /// Table per tree edge (keep_tables), or the single leaf table of a
  /// degenerate decomposition at index 0.
  const DpTable& table(int tree_edge) const { return tables_[tree_edge]; }
  int root_edge() const { return root_edge_; }

 private:
  const DpTable& root_table() const;

  const SimpleGraph& host_;
  BranchDecomposition bd_;
  MiddleSetAnnotation mids_;
  RootedView view_;
  Coloring coloring_;
  SimpleGraph pattern_;
  DpOptions options_;
  std::unique_ptr<PatternFilter> filter_;
  std::vector<DpTable> tables_;
  int root_edge_ = -1;
  bool degenerate_ = false;
  bool empty_ = false;
  DpStats stats_;
};

/// Colourful count of P in the host over a branch decomposition (rooted
/// here if needed). P must not have isolated vertices.
Count count_colorful(const SimpleGraph& host, const BranchDecomposition& bd, const Coloring& coloring,
                     const SimpleGraph& pattern, bool induced, bool prune = true, DpStats* stats = nullptr);

}  // namespace surfcount
