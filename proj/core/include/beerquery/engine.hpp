#pragma once

#include <memory>
#include <optional>

#include "beerquery/dual.hpp"
#include "beerquery/harness.hpp"
#include "beerquery/normalize.hpp"
#include "beerquery/oracle.hpp"
#include "beerquery/path_reporter.hpp"
#include "beerquery/sssp.hpp"

namespace beerquery {

// End-to-end query pipeline over one input graph: normalize, build the dual
// with its indices, the beer-base tables, chains, the face-pair oracle, and
// the path reporter. Immutable after construction; queries are safe to run
// concurrently. Reported walks are translated back to the input graph.
class QueryEngine {
 public:
  explicit QueryEngine(BeerGraph input,
                       std::optional<NodeId> dual_root = std::nullopt);

  QueryEngine(const QueryEngine&) = delete;
  QueryEngine& operator=(const QueryEngine&) = delete;

  const BeerGraph& input() const { return norm_.original; }
  const NormalizedGraph& normalized() const { return norm_; }
  const DualTree& dual() const { return dual_; }
  const BeerBaseTables& beer_base() const { return tables_; }
  const ChainSet& chains() const { return chains_; }
  const BeerDistanceOracle& oracle() const { return oracle_; }
  const PathReporter& reporter() const { return reporter_; }

  Weight query_dist(VertexId u, VertexId v) const {
    return oracle_.query_dist(u, v);
  }
  Weight query_beer_dist(VertexId u, VertexId v) const {
    return oracle_.query_beer_dist(u, v);
  }

  // Shortest beer walk from s to t as a walk in the ORIGINAL input graph.
  PathInG query_beer_path(VertexId s, VertexId t) const;

  SsspBeerResult sssp(VertexId s) const { return sssp_beer(dual_, tables_, s); }
  // Beer walk for one target, translated to the input graph.
  PathInG sssp_path(const SsspBeerResult& result, VertexId v) const;

 private:
  PathInG to_original(const PathInG& walk) const;

  NormalizedGraph norm_;
  DualTree dual_;
  BeerBaseTables tables_;
  ChainSet chains_;
  BeerDistanceOracle oracle_;
  PathReporter reporter_;
};

}  // namespace beerquery
