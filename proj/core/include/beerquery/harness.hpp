#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "beerquery/graph.hpp"
#include "beerquery/tree_index.hpp"

namespace beerquery {

// ---------------------------------------------------------------------------
// Ground-truth oracles. These are deliberately independent of the query
// engine: plain tentative-pair Dijkstra over (vertex, visited-a-store) states.
// ---------------------------------------------------------------------------

struct SourceDistances {
  std::vector<double> dist;    // dist(s,v)
  std::vector<double> dist_b;  // dist_B(s,v); +inf when unreachable
};

SourceDistances oracle_beer_sssp(const BeerGraph& g, VertexId s);

struct OracleTables {
  VertexId n = 0;
  std::vector<double> dist;    // row-major n*n
  std::vector<double> dist_b;  // row-major n*n

  double d(VertexId u, VertexId v) const {
    return dist[static_cast<std::size_t>(u) * n + v];
  }
  double db(VertexId u, VertexId v) const {
    return dist_b[static_cast<std::size_t>(u) * n + v];
  }
};

OracleTables oracle_all_pairs(const BeerGraph& g);

// ---------------------------------------------------------------------------
// Random instance generators. Deterministic per seed; weights are drawn from
// [0.5, 2.0] snapped to a 2^-20 dyadic grid so that every path sum in the
// generated corpus is exact in double arithmetic.
// ---------------------------------------------------------------------------

// Uniform random maximal outerplanar beer graph (uniform triangulation of the
// n-gon), GTI-repaired so the instance is immediately usable downstream.
BeerGraph gen_random_maximal(VertexId n, std::uint64_t seed, double beer_fraction);

// Random (generally non-maximal) outerplanar instance: generate maximal, then
// drop each chord with probability 1 - chord_keep_prob. The hull is kept, so
// the result stays connected. Weights are not GTI-repaired.
BeerGraph gen_random_outerplanar(VertexId n, std::uint64_t seed,
                                 double chord_keep_prob, double beer_fraction);

// Random non-crossing spanning tree (no hull), for exercising normalization.
BeerGraph gen_random_tree(VertexId n, std::uint64_t seed, double beer_fraction);

// Serpentine triangulation whose dual is a path; shortest paths between far
// hull positions have linearly many vertices. Stores at the given vertices.
BeerGraph gen_zigzag_maximal(VertexId n, std::vector<VertexId> beer);

// ---------------------------------------------------------------------------
// Reduction from path-minimum queries to beer-distance queries: each tree
// edge e is subdivided through a new node x_e (two unit edges) and a pendant
// store x'_e at weight s(e).
// ---------------------------------------------------------------------------

struct ReductionInstance {
  BeerGraph beer_tree;                      // T', 3n-2 vertices
  std::vector<VertexId> node_of;            // original node -> T' vertex
  std::vector<std::pair<VertexId, VertexId>> edge_gadget;  // edge -> (x_e, x'_e)
  std::vector<std::pair<int, int>> edge_nodes;  // edge -> (tree endpoints)
  std::vector<double> values;               // s(e)
  RootedTree tree;                          // the input tree
  TreeIndex tree_index;                     // level/LCA queries on it
};

ReductionInstance reduce_path_min(const RootedTree& tree,
                                  const std::vector<double>& edge_values);

class QueryEngine;

// Recovers min s(e) over the u-v tree path from beer distances in T': the
// answer is (dist_B(u,v) - 2*len)/2. Also reports the gadget edge whose store
// the engine's reported walk visits.
std::pair<double, int> answer_path_min(const ReductionInstance& inst,
                                       QueryEngine& engine, int u, int v);

}  // namespace beerquery
