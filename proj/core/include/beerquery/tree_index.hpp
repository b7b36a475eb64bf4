#pragma once

#include "beerquery/rooted_tree.hpp"

#include <vector>

namespace beerquery {

// O(1) structural queries on a static rooted tree: level, LCA (Euler tour +
// sparse table), subtree membership (in/out times), second node on a path
// (level ancestor by binary lifting), and path membership.
class TreeIndex {
 public:
  TreeIndex() = default;
  explicit TreeIndex(const RootedTree& tree);

  NodeId size() const { return static_cast<NodeId>(level_.size()); }
  NodeId level(NodeId u) const { return level_[u]; }
  NodeId parent(NodeId u) const { return parent_[u]; }

  NodeId lca(NodeId u, NodeId v) const;

  // True iff u lies in the subtree rooted at v (including u == v).
  bool in_subtree(NodeId u, NodeId v) const {
    return tin_[v] <= tin_[u] && tin_[u] < tout_[v];
  }

  // Ancestor of u at the given level; throws TreeError if level(u) < target.
  NodeId level_ancestor(NodeId u, NodeId target_level) const;

  // Neighbor of u on the unique u-v path; throws TreeError when u == v.
  NodeId second_on_path(NodeId u, NodeId v) const;

  // True iff w lies on the path between u and v (endpoints included).
  bool on_path(NodeId u, NodeId v, NodeId w) const;

  // Edge count of the u-v path.
  NodeId path_length(NodeId u, NodeId v) const {
    NodeId a = lca(u, v);
    return level_[u] + level_[v] - 2 * level_[a];
  }

 private:
  std::vector<NodeId> parent_;
  std::vector<NodeId> level_;
  std::vector<NodeId> tin_, tout_;
  std::vector<NodeId> euler_;      // node at each euler position
  std::vector<NodeId> first_pos_;  // first euler position of a node
  std::vector<std::vector<NodeId>> euler_min_;  // sparse table over euler levels
  std::vector<std::vector<NodeId>> jump_;       // binary lifting ancestors
};

}  // namespace beerquery
