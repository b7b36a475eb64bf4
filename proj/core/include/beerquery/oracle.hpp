#pragma once

#include "beerquery/beer_base.hpp"
#include "beerquery/path_sum.hpp"

namespace beerquery {

// The 18-quantity summary Q_{F,F'}: all distances and beer distances between
// the vertex triples of two distinct faces, laid out by position in each
// face's sorted triple.
struct FacePairSummary {
  static constexpr int kQuantityCount = 18;

  std::array<VertexId, 3> from{-1, -1, -1};
  std::array<VertexId, 3> to{-1, -1, -1};
  std::array<double, 9> dist{};  // [i*3+j] = dist(from[i], to[j])
  std::array<double, 9> beer{};

  bool is_bottom() const { return from[0] < 0; }
  static FacePairSummary bottom() { return FacePairSummary{}; }

  int index_of_from(VertexId x) const {
    for (int i = 0; i < 3; ++i) {
      if (from[i] == x) return i;
    }
    throw GraphError("face pair: vertex not in source face");
  }
  int index_of_to(VertexId x) const {
    for (int i = 0; i < 3; ++i) {
      if (to[i] == x) return i;
    }
    throw GraphError("face pair: vertex not in target face");
  }
  double d(VertexId x, VertexId y) const {
    return dist[index_of_from(x) * 3 + index_of_to(y)];
  }
  double db(VertexId x, VertexId y) const {
    return beer[index_of_from(x) * 3 + index_of_to(y)];
  }
};

// Q_{F,F'} for faces adjacent in the dual, from the five-edge induced
// subgraph and the beer-base tables. Throws GraphError if the faces are not
// adjacent.
FacePairSummary base_summary(const DualTree& dual, const BeerBaseTables& tables,
                             NodeId f, NodeId f_next);

// Semigroup operator: Q_{F,F'} (+) Q_{F',F''} = Q_{F,F''}. Face-incompatible
// operands yield the bottom element, which well-formed path folds never
// produce.
FacePairSummary combine(const FacePairSummary& q1, const FacePairSummary& q2);

// Q_{F',F} from Q_{F,F'} (distances are symmetric).
FacePairSummary transpose(const FacePairSummary& q);

// Distance and beer-distance queries for arbitrary vertex pairs: same-face
// cases answer from the base tables, everything else is a path-sum fold of
// face-pair summaries along the dual.
class BeerDistanceOracle {
 public:
  BeerDistanceOracle() = default;
  BeerDistanceOracle(const DualTree& dual, const BeerBaseTables& tables);

  Weight query_dist(VertexId u, VertexId v) const;
  Weight query_beer_dist(VertexId u, VertexId v) const;

  // The composed summary between two distinct faces (exposed for tests).
  FacePairSummary face_pair(NodeId f1, NodeId f2) const;

 private:
  struct QCombine {
    FacePairSummary operator()(const FacePairSummary& a,
                               const FacePairSummary& b) const {
      return combine(a, b);
    }
  };
  struct QTranspose {
    FacePairSummary operator()(const FacePairSummary& q) const {
      return transpose(q);
    }
  };

  const DualTree* dual_ = nullptr;
  const BeerBaseTables* tables_ = nullptr;
  PathSumIndex<FacePairSummary, QCombine, QTranspose> psum_;
};

BeerDistanceOracle build_oracle(const DualTree& dual, const BeerBaseTables& tables);

}  // namespace beerquery
