#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "surfcount/branch_decomposition.hpp"

namespace testing_support {

using surfcount::BranchDecomposition;
using surfcount::TreeNodeKind;
using surfcount::VertexId;

// Middle sets by definition: split the leaves at each tree edge and
// intersect the two vertex sets.
inline std::vector<std::vector<VertexId>> brute_middle_sets(const BranchDecomposition& bd,
                                                            const std::vector<std::array<VertexId, 2>>& edges) {
  std::vector<std::vector<VertexId>> out;
  for (int t = 0; t < bd.tree_edge_count(); ++t) {
    std::set<VertexId> side[2];
    for (int s = 0; s < 2; ++s) {
      std::vector<int> stack{bd.tree_edge(t)[s]};
      std::vector<char> seen(bd.node_count(), 0);
      seen[stack.back()] = 1;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        if (bd.node(x).kind == TreeNodeKind::leaf) {
          side[s].insert(edges[bd.node(x).edge][0]);
          side[s].insert(edges[bd.node(x).edge][1]);
        }
        for (int u : bd.incident(x)) {
          if (u == t) continue;
          const int y = bd.other_end(u, x);
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
        }
      }
    }
    std::vector<VertexId> mid;
    std::set_intersection(side[0].begin(), side[0].end(), side[1].begin(), side[1].end(), std::back_inserter(mid));
    out.push_back(mid);
  }
  return out;
}

}  // namespace testing_support
