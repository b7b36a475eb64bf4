#include "beerquery/rooted_tree.hpp"

#include <string>

namespace beerquery {

RootedTree::RootedTree(std::vector<NodeId> parent, NodeId root)
    : parent_(std::move(parent)), root_(root) {
  const NodeId n = size();
  if (root < 0 || root >= n || parent_[root] != -1) {
    throw TreeError("malformed tree: bad root");
  }
  children_.assign(n, {});
  for (NodeId v = 0; v < n; ++v) {
    NodeId p = parent_[v];
    if (v == root_) continue;
    if (p < 0 || p >= n) throw TreeError("malformed tree: bad parent");
    children_[p].push_back(v);
  }
  build_orders();
}

RootedTree RootedTree::from_edges(
    NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges, NodeId root) {
  std::vector<std::vector<NodeId>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<NodeId> parent(n, -2);
  std::vector<NodeId> stack{root};
  parent[root] = -1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId u : adj[v]) {
      if (parent[u] == -2) {
        parent[u] = v;
        stack.push_back(u);
      }
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (parent[v] == -2) throw TreeError("malformed tree: disconnected");
  }
  return RootedTree(std::move(parent), root);
}

void RootedTree::build_orders() {
  const NodeId n = size();
  preorder_.clear();
  preorder_.reserve(n);
  std::vector<NodeId> stack{root_};
  NodeId seen = 0;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    preorder_.push_back(v);
    ++seen;
    if (seen > n) throw TreeError("malformed tree: cycle");
    // Push children in reverse so they pop in declaration order.
    const auto& cs = children_[v];
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) stack.push_back(*it);
  }
  if (seen != n) throw TreeError("malformed tree: unreachable nodes");
}

}  // namespace beerquery
