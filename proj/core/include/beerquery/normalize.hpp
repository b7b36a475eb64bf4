#pragma once

#include <utility>
#include <vector>

#include "beerquery/graph.hpp"

namespace beerquery {

// A validated outerplanar beer graph converted to maximal form with the
// generalized triangle inequality enforced, plus enough provenance to expand
// any normalized edge back into a path of the input graph.
struct NormalizedGraph {
  BeerGraph graph;     // maximal, weights equal input distances
  BeerGraph original;  // the graph normalize() was called with
  std::vector<int> added_edges;       // edge ids absent from the input
  std::vector<VertexId> gti_parent;   // per edge id; -1 when the edge itself
                                      // realizes the distance
  CsrAdjacency adj;                   // adjacency of `graph`

  // Edge id in graph.edges() order, or -1.
  int edge_id(VertexId u, VertexId v) const;
};

// Completes the hull and fan-triangulates every non-triangular interior face
// (apex = smallest face vertex). Added edges carry weight +inf. Returns the
// maximal graph and the added edges as (u,v) pairs. Throws GraphError for
// n < 3.
std::pair<BeerGraph, std::vector<std::pair<VertexId, VertexId>>> maximalize(
    const BeerGraph& g);

// Two face traversals of the dual (post-order then pre-order) that relax
// every edge weight to the true distance between its endpoints. Returns per
// canonical edge the distance delta and the relaxing vertex p (or -1).
// Requires a maximal graph.
std::pair<std::vector<Weight>, std::vector<VertexId>> enforce_gti(
    const BeerGraph& g);

// maximalize + enforce_gti, bundled with the provenance maps.
NormalizedGraph normalize(const BeerGraph& g);

// The input-graph path realizing delta(u,v) for an edge (u,v) of norm.graph,
// obtained by recursing through the gti_parent map. Throws GraphError if
// (u,v) is not an edge.
PathInG expand_edge(const NormalizedGraph& norm, VertexId u, VertexId v);

}  // namespace beerquery
