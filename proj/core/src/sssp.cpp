#include "beerquery/sssp.hpp"

#include <algorithm>
#include <queue>

namespace beerquery {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

SsspBeerResult sssp_beer(const DualTree& dual, const BeerBaseTables& tables,
                         VertexId s) {
  const NormalizedGraph& norm = dual.norm();
  const CsrAdjacency& adj = norm.adj;
  const VertexId n = adj.n();

  SsspBeerResult res;
  res.source = s;
  res.dist.assign(n, kInf);
  res.dist_b.assign(n, kInf);
  res.pred.assign(n, -1);
  res.beer_pred.assign(n, -1);
  res.prefix_is_beer.assign(n, 0);

  // Plain distances: binary-heap relaxation over the normalized graph.
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  res.dist[s] = 0.0;
  pq.emplace(0.0, s);
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d != res.dist[v]) continue;
    const VertexId* nb = adj.neighbors(v);
    const Weight* ws = adj.weights(v);
    for (int i = 0; i < adj.degree(v); ++i) {
      double nd = d + ws[i].value();
      if (nd < res.dist[nb[i]]) {
        res.dist[nb[i]] = nd;
        res.pred[nb[i]] = v;
        pq.emplace(nd, nb[i]);
      }
    }
  }

  // Beer distances: traverse faces outward from F_s; each face's free vertex
  // gets the four-term minimum over the two shared vertices.
  const NodeId f_s = dual.face_of(s);
  std::vector<char> assigned(n, 0);
  for (VertexId x : dual.face(f_s).v) {
    if (x == s) {
      res.dist_b[x] = tables.vertex_beer_dist(x);
    } else {
      res.dist_b[x] = tables.edge_beer_dist_by_id(norm.edge_id(s, x));
    }
    assigned[x] = 1;
  }

  const NodeId fcount = dual.face_count();
  std::vector<NodeId> order;
  order.reserve(fcount);
  std::vector<NodeId> from(fcount, -1);
  std::vector<char> seen(fcount, 0);
  order.push_back(f_s);
  seen[f_s] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    NodeId f = order[head];
    for (int k = 0; k < 3; ++k) {
      int e = dual.face_edge_ids(f)[k];
      const auto& fs = dual.faces_of_edge(e);
      NodeId other = fs[0] == f ? fs[1] : fs[0];
      if (other < 0 || seen[other]) continue;
      seen[other] = 1;
      from[other] = f;
      order.push_back(other);
    }
  }

  for (std::size_t i = 1; i < order.size(); ++i) {
    NodeId f = order[i];
    auto [sa, sb] = dual.shared_edge(f, from[f]);
    VertexId a = std::min(sa, sb), b = std::max(sa, sb);
    VertexId c = dual.face(f).opposite(a, b);
    if (assigned[c]) continue;  // deeper face of P_c; already settled
    int eac = norm.edge_id(a, c);
    int ebc = norm.edge_id(b, c);
    double wac = norm.graph.edges()[eac].w.value();
    double wbc = norm.graph.edges()[ebc].w.value();
    struct Cand {
      double value;
      VertexId p;
      char prefix_beer;
    };
    const Cand cands[4] = {
        {res.dist[a] + tables.edge_beer_dist_by_id(eac), a, 0},
        {res.dist_b[a] + wac, a, 1},
        {res.dist[b] + tables.edge_beer_dist_by_id(ebc), b, 0},
        {res.dist_b[b] + wbc, b, 1},
    };
    Cand best = cands[0];
    for (int k = 1; k < 4; ++k) {
      if (cands[k].value < best.value) best = cands[k];
    }
    res.dist_b[c] = best.value;
    res.beer_pred[c] = best.p;
    res.prefix_is_beer[c] = best.prefix_beer;
    assigned[c] = 1;
  }
  return res;
}

PathInG sssp_beer_path(const DualTree& dual, const BeerBaseTables& tables,
                       const SsspBeerResult& result, VertexId v) {
  if (result.dist_b[v] == kInf) throw GraphError("sssp_beer_path: unreachable");
  const VertexId s = result.source;

  PathInG out;
  out.weight = Weight(result.dist_b[v]);

  // Peel plain edges off the tail while the prefix stays a beer path.
  std::vector<VertexId> tail;
  VertexId cur = v;
  while (result.beer_pred[cur] != -1 && result.prefix_is_beer[cur]) {
    tail.push_back(cur);
    cur = result.beer_pred[cur];
  }

  if (result.beer_pred[cur] == -1) {
    // Base: cur is s or shares a face with s.
    out.vertices = beer_edge_path(dual, tables, s, cur).vertices;
  } else {
    // Plain prefix to p(cur), then the beer path across edge (p(cur), cur).
    VertexId p = result.beer_pred[cur];
    std::vector<VertexId> prefix;
    for (VertexId x = p; x != -1; x = result.pred[x]) prefix.push_back(x);
    std::reverse(prefix.begin(), prefix.end());
    out.vertices = std::move(prefix);
    PathInG beer_leg = beer_edge_path(dual, tables, p, cur);
    out.vertices.insert(out.vertices.end(), beer_leg.vertices.begin() + 1,
                        beer_leg.vertices.end());
  }
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
    out.vertices.push_back(*it);
  }
  return out;
}

}  // namespace beerquery
