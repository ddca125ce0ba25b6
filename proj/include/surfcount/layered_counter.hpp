#pragma once

#include <cstdint>
#include <vector>

#include "surfcount/dp_engine.hpp"
#include "surfcount/embedded_map.hpp"
#include "surfcount/graph.hpp"
#include "surfcount/oracle.hpp"
#include "surfcount/ssd_builder.hpp"

namespace surfcount {

/// A pattern with its isolated vertices split off. The remaining components
/// are grouped into isomorphism types; a sub-pattern P^S is addressed by the
/// number of copies of each type it takes, packed as a mixed-radix index.
/// Index 0 is the empty sub-pattern, full() the whole stripped pattern.
class PatternGraph {
 public:
  explicit PatternGraph(const SimpleGraph& pattern);

  const SimpleGraph& pattern() const { return pattern_; }
  /// P with its K1 components removed.
  const SimpleGraph& stripped() const { return stripped_; }
  int isolated() const { return isolated_; }
  int k() const { return stripped_.vertex_count(); }

  /// Components of the stripped pattern (vertex ids of stripped()).
  const std::vector<std::vector<VertexId>>& components() const { return components_; }
  int type_count() const { return static_cast<int>(multiplicity_.size()); }
  int type_of_component(int c) const { return type_of_[c]; }
  int multiplicity(int type) const { return multiplicity_[type]; }

  int subset_count() const { return static_cast<int>(subpatterns_.size()); }
  int full() const { return subset_count() - 1; }
  std::vector<int> copies(int s) const;
  int index_of(const std::vector<int>& copies) const;
  const SimpleGraph& sub(int s) const { return subpatterns_[s]; }

  /// All (s1, s2) with copies(s1) + copies(s2) = copies(s) and s2 != 0.
  const std::vector<std::pair<int, int>>& splits(int s) const { return splits_[s]; }

 private:
  SimpleGraph pattern_, stripped_;
  int isolated_ = 0;
  std::vector<std::vector<VertexId>> components_;
  std::vector<int> type_of_, multiplicity_;
  std::vector<SimpleGraph> subpatterns_;
  std::vector<std::vector<std::pair<int, int>>> splits_;
};

/// Colour x - i + 1 for vertices of layer x (layer -1, the apex, gets 1).
Coloring layer_coloring(const std::vector<int>& layer_of, int i, int j);

/// The window H_i^j with a surface split decomposition of G_i^j.
struct Window {
  LayerGraph graph;
  SimpleGraph host;  // local vertices, window edges only
  BranchDecomposition bd;
  Coloring coloring;
};

Window build_window(const LayeredMap& layered, int i, int j);

/// Colourful subgraphs of G_i^j isomorphic to `pattern_s` (no isolated
/// vertices), with the layers taken from root r.
Count dpc(const Map& map, VertexId r, int i, int j, const SimpleGraph& pattern_s, bool induced);

struct CounterOptions {
  VertexId root = 0;
  bool prune = true;
};

struct CounterStats {
  int depth = 0;
  std::uint64_t windows = 0;
  std::uint64_t grid_terms = 0;
  DpStats dp;
  /// Work of the counting stage: table work plus recursion terms.
  std::uint64_t counting_work() const { return dp.work() + grid_terms; }
};

/// DPC_i^j(S) for j - i < k and DPT^j(S), S indexed as in PatternGraph.
class CountGrid {
 public:
  CountGrid(int depth, int k, int subsets);

  int depth() const { return depth_; }
  int k() const { return k_; }
  /// 0 when i < 0, when j - i >= k, or for the empty sub-pattern.
  Count dpc(int i, int j, int s) const;
  /// 1 for the empty sub-pattern, otherwise 0 when j < 0.
  Count dpt(int j, int s) const;

  void set_dpc(int i, int j, int s, Count value);
  void set_dpt(int j, int s, Count value);

 private:
  int depth_, k_, subsets_;
  std::vector<Count> dpc_;  // [(j * k + (j - i)) * subsets + s]
  std::vector<Count> dpt_;  // [j * subsets + s]
};

/// Counting stage: every DPC value from the windows, then the DPT recursion
/// in increasing j.
CountGrid dpt_all(const Map& map, const PatternGraph& pattern, bool induced, const CounterOptions& options = {},
                  CounterStats* stats = nullptr);

/// Number of subgraphs of the host (induced subgraphs in induced mode)
/// isomorphic to P. Isolated pattern vertices are counted with a binomial
/// factor in plain mode and rejected in induced mode.
Count count_isomorphs(const Map& map, const SimpleGraph& pattern, bool induced, const CounterOptions& options = {},
                      CounterStats* stats = nullptr);

struct ListingStats {
  CounterStats counting;
  std::uint64_t generation_ops = 0;  // cell operations of the generation stage
  std::uint64_t listed = 0;
};

/// The subgraphs counted by count_isomorphs, in a deterministic order; at
/// most `limit` of them (0 = all). Patterns with isolated vertices are
/// rejected.
std::vector<Subgraph> list_isomorphs(const Map& map, const SimpleGraph& pattern, bool induced, std::uint64_t limit = 0,
                                     const CounterOptions& options = {}, ListingStats* stats = nullptr);

}  // namespace surfcount
