#pragma once

#include "beerquery/beer_base.hpp"

namespace beerquery {

// Single-source distances and beer distances with enough bookkeeping to
// extract each beer path in O(L).
struct SsspBeerResult {
  VertexId source = 0;
  std::vector<double> dist;
  std::vector<double> dist_b;
  std::vector<VertexId> pred;       // shortest-path tree predecessor (-1 at s)
  std::vector<VertexId> beer_pred;  // p(v); -1 when v is s or shares F_s
  std::vector<char> prefix_is_beer; // set: the s..p(v) subpath is a beer path
};

// dist(s,.) by a binary-heap shortest-path pass, dist_B(s,.) by a pre-order
// face traversal rooted at a face containing s.
SsspBeerResult sssp_beer(const DualTree& dual, const BeerBaseTables& tables,
                         VertexId s);

// The beer walk realizing dist_B(s,v), in the normalized graph. Throws
// GraphError when dist_B(s,v) is infinite.
PathInG sssp_beer_path(const DualTree& dual, const BeerBaseTables& tables,
                       const SsspBeerResult& result, VertexId v);

}  // namespace beerquery
