#pragma once

#include "beerquery/dual.hpp"

namespace beerquery {

// dist_B(u,u) for every vertex and dist_B(u,v) for every edge, produced by a
// post-order pass (root-far sides) and a pre-order pass (root sides) over the
// dual, plus witnesses that reconstruct the realizing walks. Witnesses are
// recomputed canonically from the final values, so reported walks do not
// depend on the dual root.
class BeerBaseTables {
 public:
  BeerBaseTables() = default;

  double edge_beer_dist_by_id(int edge_id) const { return db_edge_[edge_id]; }
  double vertex_beer_dist(VertexId u) const { return db_vertex_[u]; }

  // Side values, canonical edge orientation u < v. "not_root" is the side of
  // the edge away from the dual root.
  double side_pair(int edge_id, bool root_side) const {
    return root_side ? r_pair_[edge_id] : nr_pair_[edge_id];
  }
  double side_self_lo(int edge_id, bool root_side) const {
    return root_side ? r_lo_[edge_id] : nr_lo_[edge_id];
  }
  double side_self_hi(int edge_id, bool root_side) const {
    return root_side ? r_hi_[edge_id] : nr_hi_[edge_id];
  }

 private:
  friend BeerBaseTables build_beer_base(const DualTree& dual);
  friend PathInG beer_edge_path(const DualTree& dual, const BeerBaseTables& t,
                                VertexId u, VertexId v);

  // Side values per canonical edge: pair = dist_B(u,v), lo/hi = dist_B at the
  // smaller/larger endpoint.
  std::vector<double> nr_pair_, nr_lo_, nr_hi_;
  std::vector<double> r_pair_, r_lo_, r_hi_;
  std::vector<double> db_edge_;
  std::vector<double> db_vertex_;
  // Witnesses: x = via-vertex (-1 when an endpoint is a store), left = the
  // u-side subpath carries the beer store.
  std::vector<VertexId> wit_edge_x_;
  std::vector<char> wit_edge_left_;
  std::vector<VertexId> wit_vertex_;
};

BeerBaseTables build_beer_base(const DualTree& dual);

// Shortest beer path for u = v or an edge (u,v), reconstructed from the
// witnesses in O(L). Throws GraphError when dist_B is infinite or (u,v) is
// not an edge.
PathInG beer_edge_path(const DualTree& dual, const BeerBaseTables& t,
                       VertexId u, VertexId v);

}  // namespace beerquery
