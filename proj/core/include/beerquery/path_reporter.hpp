#pragma once

#include "beerquery/oracle.hpp"

namespace beerquery {

// The column DAG H for one (s,t) query: columns of one or two vertices, all
// edges between adjacent columns, each edge carrying a plain and a beer
// weight taken from fan queries in the context vertex's fan.
struct DagH {
  struct Column {
    std::array<VertexId, 2> v{-1, -1};
    int size = 0;
    // Fan context for the edges entering this column.
    VertexId fan_ctx = -1;
    // Edge weights from the previous column: [pred_slot][cur_slot].
    std::array<std::array<double, 2>, 2> edge_dist;
    std::array<std::array<double, 2>, 2> edge_beer;
    // DP values and back-references per slot.
    std::array<double, 2> dist;
    std::array<double, 2> beer;
    std::array<int, 2> bp_dist;       // predecessor slot of the plain chain
    std::array<int, 2> bp_beer_pred;  // predecessor slot of the beer chain
    std::array<char, 2> bp_beer_last; // 1: the last DAG edge is the beer edge
  };
  std::vector<Column> columns;
};

// Theorem-2 query layer: O(1) fan queries (distances, beer distances) and
// O(L) path reporting over the column DAG. Walks are in the normalized
// graph; the engine translates them back to the input graph.
class PathReporter {
 public:
  PathReporter() = default;
  PathReporter(const DualTree& dual, const BeerBaseTables& tables,
               const ChainSet& chains, const BeerDistanceOracle& oracle);

  // u and w must be vertices of the fan G[P_v] (v itself or a neighbor).
  Weight fan_dist(VertexId v, VertexId u, VertexId w) const;
  PathInG fan_sp(VertexId v, VertexId u, VertexId w) const;
  Weight fan_beer_dist(VertexId v, VertexId u, VertexId w) const;
  PathInG fan_beer_path(VertexId v, VertexId u, VertexId w) const;

  // Requires t outside the fan of s (the query layer handles fan cases).
  DagH build_dag(VertexId s, VertexId t) const;

  // Shortest beer path in the normalized graph, weight equal to
  // query_beer_dist(s, t). Throws GraphError when no beer store is reachable.
  PathInG query_beer_path(VertexId s, VertexId t) const;

  bool in_fan(VertexId v, VertexId x) const;

 private:
  void check_fan(VertexId v, VertexId x) const;
  double edge_w(VertexId a, VertexId b) const;
  double edge_db(VertexId a, VertexId b) const;

  const DualTree* dual_ = nullptr;
  const BeerBaseTables* tables_ = nullptr;
  const ChainSet* chains_ = nullptr;
  const BeerDistanceOracle* oracle_ = nullptr;
};

}  // namespace beerquery
