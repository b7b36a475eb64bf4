#pragma once

#include "beerquery/rooted_tree.hpp"

#include <bit>
#include <optional>
#include <utility>
#include <vector>

namespace beerquery {

// Sentinel reverse policy: edge values are direction-free, so the index keeps
// both fold directions per segment-tree node.
struct NoReverse {};

// Path-sum index for a (not necessarily commutative) semigroup over tree
// edges. Paths decompose into O(log n) heavy-path segments; each segment is a
// contiguous range of a segment tree laid out in heavy-path order, so a query
// costs O(log^2 n) combines after an O(n) build.
//
// query(u, v) returns the left-to-right fold of edge values along the walk
// from u to v. If a Reverse functor is supplied, it must satisfy
// reverse(combine(a, b)) == combine(reverse(b), reverse(a)), and the stored
// per-edge value is taken in the parent-to-child direction; the child-to-
// parent value is derived as reverse(value). With NoReverse the same value is
// used in both directions.
template <class T, class Combine, class Reverse = NoReverse>
class PathSumIndex {
  static constexpr bool kHasReverse = !std::is_same_v<Reverse, NoReverse>;
  struct Both {
    T fwd;
    T rev;
  };
  using Node = std::conditional_t<kHasReverse, T, Both>;

 public:
  PathSumIndex() = default;

  // down_value[v] for v != root: value of edge parent(v) -> v.
  PathSumIndex(const RootedTree& tree, const std::vector<T>& down_value,
               Combine combine, Reverse reverse = {})
      : combine_(std::move(combine)), reverse_(std::move(reverse)) {
    const NodeId n = tree.size();
    parent_.assign(n, -1);
    depth_.assign(n, 0);
    head_.assign(n, 0);
    pos_.assign(n, 0);
    root_ = tree.root();

    std::vector<NodeId> size(n, 1);
    const auto& order = tree.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      NodeId v = *it;
      parent_[v] = tree.parent(v);
      if (parent_[v] >= 0) size[parent_[v]] += size[v];
    }
    // Assign positions chain by chain, heavy child continuing the chain.
    std::vector<NodeId> stack{root_};
    head_[root_] = root_;
    NodeId next_pos = 0;
    std::vector<std::vector<NodeId>> kids(n);
    for (NodeId v = 0; v < n; ++v) {
      kids[v] = tree.children(v);
      // Heavy child first.
      for (std::size_t i = 1; i < kids[v].size(); ++i) {
        if (size[kids[v][i]] > size[kids[v][0]]) std::swap(kids[v][0], kids[v][i]);
      }
    }
    while (!stack.empty()) {
      NodeId h = stack.back();
      stack.pop_back();
      // Walk the heavy chain starting at h.
      for (NodeId v = h; v != -1;) {
        head_[v] = h;
        pos_[v] = next_pos++;
        depth_[v] = parent_[v] == -1 ? 0 : depth_[parent_[v]] + 1;
        NodeId heavy = -1;
        for (std::size_t i = 0; i < kids[v].size(); ++i) {
          if (i == 0) {
            heavy = kids[v][i];
          } else {
            stack.push_back(kids[v][i]);
          }
        }
        v = heavy;
      }
    }

    // Leaves of the segment tree: slot pos_[v] holds the down-direction value
    // of edge parent(v) -> v; the root slot and padding stay empty. Rounding
    // up to a power of two keeps leaves in array order, which the
    // non-commutative fold depends on.
    m_ = std::bit_ceil(static_cast<std::size_t>(n));
    nodes_.assign(2 * m_, std::nullopt);
    for (NodeId v = 0; v < n; ++v) {
      if (v == root_) continue;
      if constexpr (kHasReverse) {
        nodes_[m_ + pos_[v]] = down_value[v];
      } else {
        nodes_[m_ + pos_[v]] = Both{down_value[v], down_value[v]};
      }
    }
    for (std::size_t i = m_ - 1; i >= 1; --i) {
      nodes_[i] = merge(nodes_[2 * i], nodes_[2 * i + 1]);
    }
  }

  // Fold along the walk u -> v. Throws TreeError when u == v (the fold over
  // zero edges has no defined value).
  T query(NodeId u, NodeId v) const {
    if (u == v) throw TreeError("path_sum: nodes must be distinct");
    std::optional<T> acc;
    auto push = [&](const T& piece) {
      acc = acc ? combine_(*acc, piece) : piece;
    };

    // Climb u to the lca, emitting upward segments as we go.
    NodeId a = u, b = v;
    std::vector<std::pair<NodeId, NodeId>> down_segments;  // collected v-side
    while (head_[a] != head_[b]) {
      if (depth_[head_[a]] >= depth_[head_[b]]) {
        push(fold_up(pos_[head_[a]], pos_[a]));
        a = parent_[head_[a]];
      } else {
        down_segments.emplace_back(pos_[head_[b]], pos_[b]);
        b = parent_[head_[b]];
      }
    }
    if (a != b) {
      if (depth_[a] > depth_[b]) {
        push(fold_up(pos_[b] + 1, pos_[a]));
      } else {
        down_segments.emplace_back(pos_[a] + 1, pos_[b]);
      }
    }
    for (auto it = down_segments.rbegin(); it != down_segments.rend(); ++it) {
      push(fold_down(it->first, it->second));
    }
    return *acc;
  }

 private:
  std::optional<Node> merge(const std::optional<Node>& l,
                            const std::optional<Node>& r) const {
    if (!l) return r;
    if (!r) return l;
    if constexpr (kHasReverse) {
      return combine_(*l, *r);
    } else {
      return Both{combine_(l->fwd, r->fwd), combine_(r->rev, l->rev)};
    }
  }

  // Fold of leaf slots [l, r] in ascending array order.
  Node fold_range(std::size_t l, std::size_t r) const {
    std::optional<Node> left, right;
    for (l += m_, r += m_ + 1; l < r; l >>= 1, r >>= 1) {
      if (l & 1) left = merge(left, nodes_[l++]);
      if (r & 1) right = merge(nodes_[--r], right);
    }
    return *merge(left, right);
  }

  // Walking parent-to-child over positions [l, r].
  T fold_down(std::size_t l, std::size_t r) const {
    Node nd = fold_range(l, r);
    if constexpr (kHasReverse) {
      return nd;
    } else {
      return nd.fwd;
    }
  }

  // Walking child-to-parent over positions [l, r] (descending traversal).
  T fold_up(std::size_t l, std::size_t r) const {
    Node nd = fold_range(l, r);
    if constexpr (kHasReverse) {
      return reverse_(nd);
    } else {
      return nd.rev;
    }
  }

  Combine combine_;
  Reverse reverse_;
  NodeId root_ = 0;
  std::size_t m_ = 0;
  std::vector<NodeId> parent_, depth_, head_, pos_;
  std::vector<std::optional<Node>> nodes_;
};

// Convenience builder matching the toolkit surface.
template <class T, class Combine>
PathSumIndex<T, Combine> build_path_sum(const RootedTree& tree,
                                        const std::vector<T>& edge_value_per_child,
                                        Combine combine) {
  return PathSumIndex<T, Combine>(tree, edge_value_per_child, std::move(combine));
}

}  // namespace beerquery
