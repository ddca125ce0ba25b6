#pragma once

#include <cstdint>
#include <type_traits>
#include <vector>

#include "surfcount/embedded_map.hpp"

namespace surfcount {

/// Lists of concrete subgraphs (sorted edge-id sets) that may share storage:
/// a list is a sequence of cells, each either a subgraph or a link to
/// another list. Links to lists that consist of a single link are followed
/// at insertion time, so reading a list never chains through pointer-only
/// lists.
class IsomorphList {
 public:
  using ListId = int;

  ListId create();
  void append_subgraph(ListId list, std::vector<EdgeId> edges);
  /// Appends `target` by reference. Empty targets are skipped.
  void append_link(ListId list, ListId target);
  /// The list itself, or its target when it holds exactly one link.
  ListId seal(ListId list) const;

  bool empty(ListId list) const { return lists_[list].empty(); }
  std::size_t cell_count(ListId list) const { return lists_[list].size(); }

  /// Calls f(const std::vector<EdgeId>&) for every subgraph, in order. If f
  /// returns bool, false stops the walk.
  template <typename F>
  void visit(ListId list, F&& f) const {
    std::vector<std::pair<ListId, std::size_t>> stack{{list, 0}};
    while (!stack.empty()) {
      auto& [id, pos] = stack.back();
      if (pos == lists_[id].size()) {
        stack.pop_back();
        continue;
      }
      const Cell cell = lists_[id][pos++];
      ++operations_;
      if (cell.link) {
        stack.emplace_back(cell.index, 0);
      } else {
        if constexpr (std::is_same_v<std::invoke_result_t<F&, const std::vector<EdgeId>&>, bool>) {
          if (!f(subgraphs_[cell.index])) return;
        } else {
          f(subgraphs_[cell.index]);
        }
      }
    }
  }

  std::vector<std::vector<EdgeId>> flatten(ListId list) const;
  std::uint64_t size(ListId list) const;

  /// Cell operations so far (cells written, subgraph elements stored, cells
  /// read).
  std::uint64_t operations() const { return operations_; }
  void add_operations(std::uint64_t n) const { operations_ += n; }

 private:
  struct Cell {
    int index;
    bool link;
  };
  std::vector<std::vector<Cell>> lists_;
  std::vector<std::vector<EdgeId>> subgraphs_;
  mutable std::uint64_t operations_ = 0;
};

}  // namespace surfcount
