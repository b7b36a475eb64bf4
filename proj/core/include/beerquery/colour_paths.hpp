#pragma once

#include "beerquery/tree_index.hpp"

#include <vector>

namespace beerquery {

// A family of coloured paths in a rooted tree, each node carrying at most a
// constant number of colours. Stores per colour the path endpoints and its
// highest node, which is all the closest-colour query needs.
class ColourPathSet {
 public:
  ColourPathSet() = default;
  // paths[c] = (endpoint1, endpoint2); endpoints may coincide.
  ColourPathSet(const TreeIndex& index,
                std::vector<std::pair<NodeId, NodeId>> paths);

  int colour_count() const { return static_cast<int>(end1_.size()); }
  NodeId endpoint1(int c) const { return end1_[c]; }
  NodeId endpoint2(int c) const { return end2_[c]; }
  NodeId highest(int c) const { return high_[c]; }

  bool on_colour_path(const TreeIndex& index, int c, NodeId v) const {
    return index.on_path(end1_[c], end2_[c], v);
  }

  // The node of P_c closest to v, given a node u known to lie on P_c.
  // Throws TreeError if u is not on P_c.
  NodeId closest_colour(const TreeIndex& index, NodeId u, NodeId v, int c) const;

 private:
  std::vector<NodeId> end1_, end2_, high_;
};

}  // namespace beerquery
