#include "beerquery/oracle.hpp"

#include <algorithm>

namespace beerquery {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

FacePairSummary base_summary(const DualTree& dual, const BeerBaseTables& tables,
                             NodeId f, NodeId f_next) {
  const NormalizedGraph& norm = dual.norm();
  auto [s0, s1] = dual.shared_edge(f, f_next);  // throws if not adjacent
  VertexId shared[2] = {std::min(s0, s1), std::max(s0, s1)};

  FacePairSummary q;
  q.from = dual.face(f).v;
  q.to = dual.face(f_next).v;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      VertexId u = q.from[i], v = q.to[j];
      double d, db;
      if (u == v) {
        d = 0.0;
        db = tables.vertex_beer_dist(u);
      } else {
        int e = norm.edge_id(u, v);
        if (e >= 0) {
          d = norm.graph.edges()[e].w.value();
          db = tables.edge_beer_dist_by_id(e);
        } else {
          // u and v are the two non-shared vertices; every path between them
          // crosses a shared vertex.
          d = kInf;
          db = kInf;
          for (VertexId w : shared) {
            int euw = norm.edge_id(u, w);
            int ewv = norm.edge_id(w, v);
            double wu = norm.graph.edges()[euw].w.value();
            double wv = norm.graph.edges()[ewv].w.value();
            d = std::min(d, wu + wv);
            db = std::min(db, tables.edge_beer_dist_by_id(euw) + wv);
            db = std::min(db, wu + tables.edge_beer_dist_by_id(ewv));
          }
        }
      }
      q.dist[i * 3 + j] = d;
      q.beer[i * 3 + j] = db;
    }
  }
  return q;
}

FacePairSummary combine(const FacePairSummary& q1, const FacePairSummary& q2) {
  if (q1.is_bottom() || q2.is_bottom() || q1.to != q2.from) {
    return FacePairSummary::bottom();
  }
  FacePairSummary out;
  out.from = q1.from;
  out.to = q2.to;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      double d = kInf, db = kInf;
      for (int j = 0; j < 3; ++j) {
        double a = q1.dist[i * 3 + j];
        double b = q2.dist[j * 3 + k];
        d = std::min(d, a + b);
        db = std::min(db, q1.beer[i * 3 + j] + b);
        db = std::min(db, a + q2.beer[j * 3 + k]);
      }
      out.dist[i * 3 + k] = d;
      out.beer[i * 3 + k] = db;
    }
  }
  return out;
}

FacePairSummary transpose(const FacePairSummary& q) {
  if (q.is_bottom()) return q;
  FacePairSummary out;
  out.from = q.to;
  out.to = q.from;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out.dist[j * 3 + i] = q.dist[i * 3 + j];
      out.beer[j * 3 + i] = q.beer[i * 3 + j];
    }
  }
  return out;
}

BeerDistanceOracle::BeerDistanceOracle(const DualTree& dual,
                                       const BeerBaseTables& tables)
    : dual_(&dual), tables_(&tables) {
  const RootedTree& tree = dual.tree();
  std::vector<FacePairSummary> down(tree.size());
  for (NodeId f = 0; f < tree.size(); ++f) {
    if (tree.parent(f) < 0) continue;
    down[f] = base_summary(dual, tables, tree.parent(f), f);
  }
  psum_ = PathSumIndex<FacePairSummary, QCombine, QTranspose>(tree, down,
                                                              QCombine{},
                                                              QTranspose{});
}

FacePairSummary BeerDistanceOracle::face_pair(NodeId f1, NodeId f2) const {
  if (f1 == f2) throw GraphError("face_pair: faces must be distinct");
  FacePairSummary q = psum_.query(f1, f2);
  if (q.is_bottom()) throw GraphError("face_pair: incompatible fold");
  return q;
}

Weight BeerDistanceOracle::query_dist(VertexId u, VertexId v) const {
  if (u == v) return Weight(0.0);
  const NormalizedGraph& norm = dual_->norm();
  int e = norm.edge_id(u, v);
  if (e >= 0) return norm.graph.edges()[e].w;
  FacePairSummary q = face_pair(dual_->face_of(u), dual_->face_of(v));
  return Weight(q.d(u, v));
}

Weight BeerDistanceOracle::query_beer_dist(VertexId u, VertexId v) const {
  if (u == v) return Weight(tables_->vertex_beer_dist(u));
  const NormalizedGraph& norm = dual_->norm();
  int e = norm.edge_id(u, v);
  if (e >= 0) return Weight(tables_->edge_beer_dist_by_id(e));
  FacePairSummary q = face_pair(dual_->face_of(u), dual_->face_of(v));
  return Weight(q.db(u, v));
}

BeerDistanceOracle build_oracle(const DualTree& dual, const BeerBaseTables& tables) {
  return BeerDistanceOracle(dual, tables);
}

}  // namespace beerquery
