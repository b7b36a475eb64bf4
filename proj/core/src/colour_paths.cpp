#include "beerquery/colour_paths.hpp"

namespace beerquery {

ColourPathSet::ColourPathSet(const TreeIndex& index,
                             std::vector<std::pair<NodeId, NodeId>> paths) {
  end1_.reserve(paths.size());
  end2_.reserve(paths.size());
  high_.reserve(paths.size());
  for (auto [a, b] : paths) {
    end1_.push_back(a);
    end2_.push_back(b);
    high_.push_back(index.lca(a, b));
  }
}

NodeId ColourPathSet::closest_colour(const TreeIndex& index, NodeId u, NodeId v,
                                     int c) const {
  if (!on_colour_path(index, c, u)) {
    throw TreeError("closest_colour: u is not on the colour path");
  }
  if (u == v || on_colour_path(index, c, v)) return v;

  const NodeId c1 = end1_[c];
  const NodeId c2 = end2_[c];
  const NodeId ch = high_[c];
  const NodeId g = index.lca(u, v);

  if (g == v) {
    // u below v: the whole path hangs under v's subtree boundary.
    return ch;
  }
  if (g == u) {
    NodeId l1 = index.lca(v, c1);
    NodeId l2 = index.lca(v, c2);
    if (index.level(l1) > index.level(l2)) return l1;
    return l2;
  }
  // u and v in different subtrees of their LCA.
  if (index.level(ch) > index.level(g)) return ch;
  if (index.level(ch) < index.level(g)) return g;
  // level(ch) == level(g): exactly one endpoint lies in u's subtree.
  if (index.in_subtree(c1, u)) return index.lca(v, c2);
  return index.lca(v, c1);
}

}  // namespace beerquery
