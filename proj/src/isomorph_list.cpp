#include "surfcount/isomorph_list.hpp"

namespace surfcount {

IsomorphList::ListId IsomorphList::create() {
  lists_.emplace_back();
  ++operations_;
  return static_cast<ListId>(lists_.size() - 1);
}

void IsomorphList::append_subgraph(ListId list, std::vector<EdgeId> edges) {
  operations_ += 1 + edges.size();
  lists_[list].push_back({static_cast<int>(subgraphs_.size()), false});
  subgraphs_.push_back(std::move(edges));
}

void IsomorphList::append_link(ListId list, ListId target) {
  target = seal(target);
  if (lists_[target].empty()) return;
  ++operations_;
  lists_[list].push_back({target, true});
}

IsomorphList::ListId IsomorphList::seal(ListId list) const {
  const auto& cells = lists_[list];
  if (cells.size() == 1 && cells[0].link) return cells[0].index;
  return list;
}

std::vector<std::vector<EdgeId>> IsomorphList::flatten(ListId list) const {
  std::vector<std::vector<EdgeId>> out;
  visit(list, [&](const std::vector<EdgeId>& edges) { out.push_back(edges); });
  return out;
}

std::uint64_t IsomorphList::size(ListId list) const {
  std::uint64_t n = 0;
  visit(list, [&](const std::vector<EdgeId>&) { ++n; });
  return n;
}

}  // namespace surfcount
