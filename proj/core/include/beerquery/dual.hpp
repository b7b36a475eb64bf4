#pragma once

#include <array>
#include <optional>

#include "beerquery/colour_paths.hpp"
#include "beerquery/normalize.hpp"
#include "beerquery/rmq.hpp"
#include "beerquery/tree_index.hpp"

namespace beerquery {

// Interior triangle of a maximal outerplanar graph; vertices sorted.
struct Face {
  std::array<VertexId, 3> v;

  bool contains(VertexId x) const { return v[0] == x || v[1] == x || v[2] == x; }
  // The face vertex not on the given edge.
  VertexId opposite(VertexId a, VertexId b) const {
    for (VertexId x : v) {
      if (x != a && x != b) return x;
    }
    throw GraphError("face: degenerate edge");
  }
  friend bool operator==(const Face& a, const Face& b) { return a.v == b.v; }
};

// Weak dual D(G): one node per interior triangle, rooted, with the Lemma-1
// index and per-vertex colour paths P_v attached. Faces are numbered in ear
// extraction order (smallest hull vertex clipped first), which is root
// independent.
class DualTree {
 public:
  DualTree() = default;
  // The NormalizedGraph must outlive the dual tree.
  DualTree(const NormalizedGraph& norm, std::optional<NodeId> root_face);

  const NormalizedGraph& norm() const { return *norm_; }
  NodeId face_count() const { return static_cast<NodeId>(faces_.size()); }
  const Face& face(NodeId f) const { return faces_[f]; }
  const RootedTree& tree() const { return tree_; }
  const TreeIndex& index() const { return index_; }
  const ColourPathSet& colours() const { return colours_; }

  // The one or two faces containing a graph edge; second entry -1 for hull
  // edges.
  const std::array<NodeId, 2>& faces_of_edge(int edge_id) const {
    return edge_faces_[edge_id];
  }
  // Edge ids of a face, aligned so slot i is opposite face(f).v[i].
  const std::array<int, 3>& face_edge_ids(NodeId f) const {
    return face_edges_[f];
  }
  // Edge shared with the parent face; -1 for the root.
  int parent_edge(NodeId f) const { return parent_edge_[f]; }

  // Graph edge shared by two adjacent faces.
  std::pair<VertexId, VertexId> shared_edge(NodeId f1, NodeId f2) const;

  // Endpoints of P_v; face_of(v) is the deterministic canonical endpoint.
  NodeId path_end1(VertexId v) const { return colours_.endpoint1(v); }
  NodeId path_end2(VertexId v) const { return colours_.endpoint2(v); }
  NodeId face_of(VertexId v) const { return colours_.endpoint1(v); }

  // Membership of a graph vertex in a face's triple.
  bool face_has_vertex(NodeId f, VertexId x) const { return faces_[f].contains(x); }

 private:
  const NormalizedGraph* norm_ = nullptr;
  std::vector<Face> faces_;
  std::vector<std::array<NodeId, 2>> edge_faces_;
  std::vector<std::array<int, 3>> face_edges_;
  std::vector<int> parent_edge_;
  RootedTree tree_;
  TreeIndex index_;
  ColourPathSet colours_;
};

DualTree build_dual(const NormalizedGraph& norm,
                    std::optional<NodeId> root_face = std::nullopt);

class BeerBaseTables;

// Per-vertex chains rho_v (hull path of the fan G[P_v]) with prefix weights,
// beer-detour surcharges A_v, and one shared range-minimum index.
class ChainSet {
 public:
  ChainSet() = default;
  ChainSet(const DualTree& dual, const BeerBaseTables& tables);

  int length(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  VertexId chain_vertex(VertexId v, int i) const {
    return vertices_[offsets_[v] + i];
  }
  double prefix(VertexId v, int i) const { return prefix_[offsets_[v] + i]; }
  // Position of u on rho_v; throws GraphError if u is not on the chain.
  int position(VertexId v, VertexId u) const;

  // Weight of the chain subpath between two chain vertices.
  Weight chain_dist(VertexId v, VertexId u, VertexId w) const;

  // Leftmost position i in [lo, hi-1] minimizing A_v[i] (detour surcharge of
  // chain edge (u_i, u_i+1)).
  int min_detour(VertexId v, int lo, int hi) const;
  double detour_value(VertexId v, int i) const {
    return rmq_.value_at(a_offset(v) + i);
  }

 private:
  std::size_t a_offset(VertexId v) const {
    return static_cast<std::size_t>(offsets_[v] - v);
  }

  const DualTree* dual_ = nullptr;
  std::vector<int> offsets_;
  std::vector<VertexId> vertices_;
  std::vector<double> prefix_;
  std::vector<char> reversed_;  // chain runs against cyclic order
  RmqIndex rmq_;                // flattened A_v arrays
};

ChainSet build_chains(const DualTree& dual, const BeerBaseTables& tables);

}  // namespace beerquery
