#include "beerquery/engine.hpp"

namespace beerquery {

QueryEngine::QueryEngine(BeerGraph input, std::optional<NodeId> dual_root)
    : norm_(normalize(input)),
      dual_(norm_, dual_root),
      tables_(build_beer_base(dual_)),
      chains_(dual_, tables_),
      oracle_(dual_, tables_),
      reporter_(dual_, tables_, chains_, oracle_) {}

PathInG QueryEngine::to_original(const PathInG& walk) const {
  PathInG out;
  out.weight = walk.weight;
  out.vertices.reserve(walk.vertices.size());
  if (walk.vertices.size() == 1) {
    out.vertices = walk.vertices;
    return out;
  }
  out.vertices.push_back(walk.vertices.front());
  for (std::size_t i = 1; i < walk.vertices.size(); ++i) {
    PathInG leg = expand_edge(norm_, walk.vertices[i - 1], walk.vertices[i]);
    out.vertices.insert(out.vertices.end(), leg.vertices.begin() + 1,
                        leg.vertices.end());
  }
  return out;
}

PathInG QueryEngine::query_beer_path(VertexId s, VertexId t) const {
  return to_original(reporter_.query_beer_path(s, t));
}

PathInG QueryEngine::sssp_path(const SsspBeerResult& result, VertexId v) const {
  return to_original(sssp_beer_path(dual_, tables_, result, v));
}

}  // namespace beerquery
