#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "beerquery/weight.hpp"

namespace beerquery {

// Vertices 0..n-1 enumerate the outer face in clockwise order; the embedding
// is carried entirely by this numbering.
using VertexId = std::int32_t;

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Edge {
  VertexId u = 0;  // u < v canonically
  VertexId v = 0;
  Weight w;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.w == b.w;
  }
};

// Embedded outerplanar graph with positive edge weights and a set of
// beer-store vertices. Immutable after construction.
class BeerGraph {
 public:
  BeerGraph() = default;
  // Canonicalizes edges to u < v and sorts both lists; duplicate detection is
  // left to validate().
  BeerGraph(VertexId n, std::vector<Edge> edges, std::vector<VertexId> beer);

  VertexId n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& beer() const { return beer_; }
  bool is_beer(VertexId v) const;

  friend bool operator==(const BeerGraph& a, const BeerGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.beer_ == b.beer_;
  }

 private:
  VertexId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexId> beer_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks all BeerGraph invariants: index ranges, positive finite weights, no
// self-loops or parallel edges, connectivity, edge count <= 2n-3, and the
// non-crossing chord condition. Violations are data, not failures.
ValidationReport validate(const BeerGraph& g);

// True iff the graph is maximal outerplanar: edge count 2n-3 with the full
// outer cycle present (so every interior face is a triangle). Throws
// GraphError if the graph does not validate.
bool is_maximal(const BeerGraph& g);

// True iff dist(u,v) = w(u,v) for every edge, judged against a caller-supplied
// all-pairs distance table (row-major n*n). Throws GraphError on a dimension
// mismatch.
bool satisfies_gti(const BeerGraph& g, const std::vector<double>& all_pairs_dist);

// A walk in a specific graph; vertices may repeat (beer paths can be
// non-simple). `weight` is the sum of traversed edge weights.
struct PathInG {
  std::vector<VertexId> vertices;
  Weight weight;
};

// Compact adjacency view with neighbors of each vertex sorted by clockwise
// cyclic offset from the owner; doubles as the v-chain order.
class CsrAdjacency {
 public:
  CsrAdjacency() = default;
  explicit CsrAdjacency(const BeerGraph& g);

  VertexId n() const { return n_; }
  int degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  // Neighbors of v in cyclic clockwise order.
  const VertexId* neighbors(VertexId v) const { return &targets_[offsets_[v]]; }
  const Weight* weights(VertexId v) const { return &weights_[offsets_[v]]; }
  int offset(VertexId v) const { return offsets_[v]; }

  // Slot of u among v's neighbors, or -1.
  int slot(VertexId v, VertexId u) const;
  bool has_edge(VertexId u, VertexId v) const { return slot(u, v) >= 0; }
  // Weight of edge (u,v); throws GraphError if absent.
  Weight edge_weight(VertexId u, VertexId v) const;

 private:
  VertexId n_ = 0;
  std::vector<int> offsets_;
  std::vector<VertexId> targets_;
  std::vector<Weight> weights_;
};

}  // namespace beerquery
