#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace beerquery {

using NodeId = std::int32_t;

struct TreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Static rooted tree over nodes 0..n-1. parent[root] == -1.
class RootedTree {
 public:
  RootedTree() = default;
  RootedTree(std::vector<NodeId> parent, NodeId root);

  // Builds from an undirected edge list, rooting at `root`.
  static RootedTree from_edges(NodeId n,
                               const std::vector<std::pair<NodeId, NodeId>>& edges,
                               NodeId root);

  NodeId size() const { return static_cast<NodeId>(parent_.size()); }
  NodeId root() const { return root_; }
  NodeId parent(NodeId v) const { return parent_[v]; }
  const std::vector<NodeId>& children(NodeId v) const { return children_[v]; }

  // Nodes in an order where every parent precedes its children.
  const std::vector<NodeId>& preorder() const { return preorder_; }

 private:
  void build_orders();

  std::vector<NodeId> parent_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<NodeId> preorder_;
  NodeId root_ = 0;
};

}  // namespace beerquery
