#include "beerquery/tree_index.hpp"

#include <bit>

namespace beerquery {

TreeIndex::TreeIndex(const RootedTree& tree) {
  const NodeId n = tree.size();
  parent_.resize(n);
  level_.assign(n, 0);
  tin_.assign(n, 0);
  tout_.assign(n, 0);
  first_pos_.assign(n, -1);
  euler_.reserve(2 * static_cast<std::size_t>(n));

  // Iterative Euler tour; enter/exit events give tin/tout, the tour itself
  // feeds the LCA sparse table.
  struct Frame {
    NodeId node;
    std::size_t child_ix;
  };
  std::vector<Frame> stack;
  stack.push_back({tree.root(), 0});
  parent_[tree.root()] = -1;
  NodeId timer = 0;
  tin_[tree.root()] = timer++;
  first_pos_[tree.root()] = 0;
  euler_.push_back(tree.root());
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& cs = tree.children(f.node);
    if (f.child_ix < cs.size()) {
      NodeId c = cs[f.child_ix++];
      parent_[c] = f.node;
      level_[c] = level_[f.node] + 1;
      tin_[c] = timer++;
      first_pos_[c] = static_cast<NodeId>(euler_.size());
      euler_.push_back(c);
      stack.push_back({c, 0});
    } else {
      tout_[f.node] = timer;
      stack.pop_back();
      if (!stack.empty()) euler_.push_back(stack.back().node);
    }
  }

  const std::size_t m = euler_.size();
  std::size_t levels = m ? std::bit_width(m) : 1;
  euler_min_.resize(levels);
  euler_min_[0] = euler_;
  for (std::size_t k = 1; k < levels; ++k) {
    std::size_t half = std::size_t{1} << (k - 1);
    std::size_t len = std::size_t{1} << k;
    if (len > m) {
      euler_min_.resize(k);
      break;
    }
    euler_min_[k].resize(m - len + 1);
    for (std::size_t i = 0; i + len <= m; ++i) {
      NodeId a = euler_min_[k - 1][i];
      NodeId b = euler_min_[k - 1][i + half];
      euler_min_[k][i] = level_[a] <= level_[b] ? a : b;
    }
  }

  int max_level = 0;
  for (NodeId v = 0; v < n; ++v) max_level = std::max(max_level, (int)level_[v]);
  std::size_t jump_levels = std::bit_width(static_cast<unsigned>(max_level)) + 1;
  jump_.assign(jump_levels, std::vector<NodeId>(n));
  for (NodeId v = 0; v < n; ++v) {
    jump_[0][v] = parent_[v] == -1 ? v : parent_[v];
  }
  for (std::size_t k = 1; k < jump_levels; ++k) {
    for (NodeId v = 0; v < n; ++v) jump_[k][v] = jump_[k - 1][jump_[k - 1][v]];
  }
}

NodeId TreeIndex::lca(NodeId u, NodeId v) const {
  std::size_t a = first_pos_[u];
  std::size_t b = first_pos_[v];
  if (a > b) std::swap(a, b);
  std::size_t len = b - a + 1;
  std::size_t k = std::bit_width(len) - 1;
  NodeId x = euler_min_[k][a];
  NodeId y = euler_min_[k][b + 1 - (std::size_t{1} << k)];
  return level_[x] <= level_[y] ? x : y;
}

NodeId TreeIndex::level_ancestor(NodeId u, NodeId target_level) const {
  if (target_level > level_[u]) throw TreeError("level_ancestor: target below node");
  NodeId delta = level_[u] - target_level;
  for (std::size_t k = 0; delta; ++k, delta >>= 1) {
    if (delta & 1) u = jump_[k][u];
  }
  return u;
}

NodeId TreeIndex::second_on_path(NodeId u, NodeId v) const {
  if (u == v) throw TreeError("second_on_path: nodes must be distinct");
  if (lca(u, v) != u) return parent_[u];
  return level_ancestor(v, level_[u] + 1);
}

bool TreeIndex::on_path(NodeId u, NodeId v, NodeId w) const {
  NodeId a = lca(u, v);
  return in_subtree(w, a) && (in_subtree(u, w) || in_subtree(v, w));
}

}  // namespace beerquery
