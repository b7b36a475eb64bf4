#include "beerquery/beer_base.hpp"

#include <algorithm>

namespace beerquery {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

BeerBaseTables build_beer_base(const DualTree& dual) {
  const NormalizedGraph& norm = dual.norm();
  const BeerGraph& g = norm.graph;
  const auto& edges = g.edges();
  const std::size_t m = edges.size();

  BeerBaseTables t;
  t.nr_pair_.assign(m, kInf);
  t.nr_lo_.assign(m, kInf);
  t.nr_hi_.assign(m, kInf);
  t.r_pair_.assign(m, kInf);
  t.r_lo_.assign(m, kInf);
  t.r_hi_.assign(m, kInf);

  auto wgt = [&](int id) { return edges[id].w.value(); };
  auto self_at = [&](std::vector<double>& lo, std::vector<double>& hi, int id,
                     VertexId x) -> double& {
    return edges[id].u == x ? lo[id] : hi[id];
  };
  auto nr_self = [&](int id, VertexId x) -> double& {
    return self_at(t.nr_lo_, t.nr_hi_, id, x);
  };
  auto r_self = [&](int id, VertexId x) -> double& {
    return self_at(t.r_lo_, t.r_hi_, id, x);
  };

  // Base case: the root-far side of a hull edge is the edge alone.
  for (std::size_t id = 0; id < m; ++id) {
    if (dual.faces_of_edge(static_cast<int>(id))[1] != -1) continue;
    VertexId u = edges[id].u, v = edges[id].v;
    bool bu = g.is_beer(u), bv = g.is_beer(v);
    double w = wgt(static_cast<int>(id));
    t.nr_pair_[id] = (bu || bv) ? w : kInf;
    t.nr_lo_[id] = bu ? 0.0 : (bv ? 2.0 * w : kInf);
    t.nr_hi_[id] = bv ? 0.0 : (bu ? 2.0 * w : kInf);
  }

  const auto& order = dual.tree().preorder();

  // Post-order: each non-root face fills the root-far side of the edge it
  // shares with its parent, from the far sides of its other two edges.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId f = *it;
    int e = dual.parent_edge(f);
    if (e < 0) continue;
    VertexId u = edges[e].u, v = edges[e].v;
    VertexId w = dual.face(f).opposite(u, v);
    int euw = norm.edge_id(u, w);
    int ewv = norm.edge_id(w, v);
    t.nr_pair_[e] = std::min(
        std::min(t.nr_pair_[euw] + wgt(ewv), wgt(euw) + t.nr_pair_[ewv]),
        std::min(nr_self(euw, u) + wgt(e), wgt(e) + nr_self(ewv, v)));
    t.nr_lo_[e] =
        std::min(nr_self(euw, u),
                 std::min(2.0 * wgt(euw) + nr_self(ewv, w),
                          2.0 * wgt(e) + nr_self(ewv, v)));
    t.nr_hi_[e] =
        std::min(nr_self(ewv, v),
                 std::min(2.0 * wgt(ewv) + nr_self(euw, w),
                          2.0 * wgt(e) + nr_self(euw, u)));
  }

  // Pre-order: the root face owns all three of its edges; every other face
  // fills the root side of its two non-parent edges. The two on-parent self
  // values reference each other; one substitution resolves the fixpoint
  // because edge weights are positive.
  for (NodeId f : order) {
    int ep = dual.parent_edge(f);
    if (ep < 0) {
      for (int k = 0; k < 3; ++k) {
        int e = dual.face_edge_ids(f)[k];
        VertexId u = edges[e].u, v = edges[e].v;
        VertexId w = dual.face(f).v[k];  // slot k is opposite vertex k
        int euw = norm.edge_id(u, w);
        int ewv = norm.edge_id(w, v);
        t.r_pair_[e] = std::min(
            std::min(nr_self(euw, u) + wgt(e), t.nr_pair_[euw] + wgt(ewv)),
            std::min(wgt(e) + nr_self(ewv, v), wgt(euw) + t.nr_pair_[ewv]));
        r_self(e, u) = std::min(nr_self(euw, u),
                                std::min(2.0 * wgt(euw) + nr_self(ewv, w),
                                         2.0 * wgt(e) + nr_self(ewv, v)));
        r_self(e, v) = std::min(nr_self(ewv, v),
                                std::min(2.0 * wgt(ewv) + nr_self(euw, w),
                                         2.0 * wgt(e) + nr_self(euw, u)));
      }
      continue;
    }
    VertexId y = edges[ep].u, z = edges[ep].v;
    VertexId x = dual.face(f).opposite(y, z);
    int e1 = norm.edge_id(x, y);
    int e2 = norm.edge_id(x, z);

    // Self loops at the off-parent vertex reach beyond the parent edge; self
    // loops at an on-parent vertex reach beyond the sibling edge, whose far
    // side is its root-far ("not R") side.
    r_self(e1, x) = std::min(nr_self(e2, x),
                             std::min(2.0 * wgt(e1) + r_self(ep, y),
                                      2.0 * wgt(e2) + r_self(ep, z)));
    r_self(e2, x) = std::min(nr_self(e1, x),
                             std::min(2.0 * wgt(e2) + r_self(ep, z),
                                      2.0 * wgt(e1) + r_self(ep, y)));
    r_self(e1, y) = std::min(r_self(ep, y),
                             std::min(2.0 * wgt(e1) + nr_self(e2, x),
                                      2.0 * wgt(ep) + nr_self(e2, z)));
    r_self(e2, z) = std::min(r_self(ep, z),
                             std::min(2.0 * wgt(e2) + nr_self(e1, x),
                                      2.0 * wgt(ep) + nr_self(e1, y)));

    t.r_pair_[e1] = std::min(
        std::min(nr_self(e2, x) + wgt(e1), t.nr_pair_[e2] + wgt(ep)),
        std::min(wgt(e1) + r_self(ep, y), wgt(e2) + t.r_pair_[ep]));
    t.r_pair_[e2] = std::min(
        std::min(nr_self(e1, x) + wgt(e2), t.nr_pair_[e1] + wgt(ep)),
        std::min(wgt(e2) + r_self(ep, z), wgt(e1) + t.r_pair_[ep]));
  }

  // Final values: either side of any one incident edge covers the graph.
  const VertexId n = g.n();
  t.db_edge_.resize(m);
  for (std::size_t e = 0; e < m; ++e) {
    t.db_edge_[e] = std::min(t.r_pair_[e], t.nr_pair_[e]);
  }
  t.db_vertex_.assign(n, kInf);
  std::vector<int> canon_edge(n, -1);
  for (std::size_t e = 0; e < m; ++e) {
    if (canon_edge[edges[e].u] < 0) canon_edge[edges[e].u] = static_cast<int>(e);
    if (canon_edge[edges[e].v] < 0) canon_edge[edges[e].v] = static_cast<int>(e);
  }
  for (VertexId x = 0; x < n; ++x) {
    int e = canon_edge[x];
    t.db_vertex_[x] = std::min(r_self(e, x), nr_self(e, x));
  }

  // Canonical witnesses, recomputed from final values only; ties resolve to
  // the smallest via-vertex, so reported walks are root independent.
  t.wit_vertex_.assign(n, -1);
  {
    std::vector<double> best(n, kInf);
    std::vector<VertexId> arg(n, n);  // sentinel above every real id
    auto relax_vertex = [&](VertexId x, VertexId nb, double cand) {
      if (cand < best[x] || (cand == best[x] && nb < arg[x])) {
        best[x] = cand;
        arg[x] = nb;
      }
    };
    for (std::size_t e = 0; e < m; ++e) {
      double cand = t.db_edge_[e] + wgt(static_cast<int>(e));
      relax_vertex(edges[e].u, edges[e].v, cand);
      relax_vertex(edges[e].v, edges[e].u, cand);
    }
    for (VertexId x = 0; x < n; ++x) {
      if (g.is_beer(x) || t.db_vertex_[x] == kInf) continue;
      t.wit_vertex_[x] = arg[x];
    }
  }

  t.wit_edge_x_.assign(m, -1);
  t.wit_edge_left_.assign(m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    VertexId u = edges[e].u, v = edges[e].v;
    if (g.is_beer(u) || g.is_beer(v)) continue;  // nil: the edge itself
    if (t.db_edge_[e] == kInf) continue;
    double best = kInf;
    VertexId arg = -1;
    bool left = false;
    auto consider = [&](double cand, VertexId x, bool is_left) {
      if (cand < best) {
        best = cand;
        arg = x;
        left = is_left;
      }
    };
    const auto& fs = dual.faces_of_edge(static_cast<int>(e));
    VertexId thirds[2] = {-1, -1};
    int k = 0;
    for (NodeId f : fs) {
      if (f >= 0) thirds[k++] = dual.face(f).opposite(u, v);
    }
    if (k == 2 && thirds[0] > thirds[1]) std::swap(thirds[0], thirds[1]);
    for (int i = 0; i < k; ++i) {
      VertexId w = thirds[i];
      int euw = norm.edge_id(u, w);
      int ewv = norm.edge_id(w, v);
      consider(t.db_edge_[euw] + wgt(ewv), w, true);
      consider(wgt(euw) + t.db_edge_[ewv], w, false);
    }
    consider(t.db_vertex_[u] + wgt(static_cast<int>(e)), u, true);
    consider(wgt(static_cast<int>(e)) + t.db_vertex_[v], v, false);
    t.wit_edge_x_[e] = arg;
    t.wit_edge_left_[e] = left ? 1 : 0;
  }

  return t;
}

PathInG beer_edge_path(const DualTree& dual, const BeerBaseTables& t,
                       VertexId u, VertexId v) {
  const NormalizedGraph& norm = dual.norm();
  const BeerGraph& g = norm.graph;

  PathInG out;
  if (u == v) {
    if (t.db_vertex_[u] == kInf) throw GraphError("beer_edge_path: unreachable");
    out.weight = Weight(t.db_vertex_[u]);
  } else {
    int e = norm.edge_id(u, v);
    if (e < 0) throw GraphError("beer_edge_path: not an edge");
    if (t.db_edge_[e] == kInf) throw GraphError("beer_edge_path: unreachable");
    out.weight = Weight(t.db_edge_[e]);
  }

  // Walk the witness tree iteratively; each expansion step appends at least
  // one vertex, and sub-distances strictly decrease, so this terminates in
  // O(L).
  struct Task {
    VertexId a, b;  // b == -1: emit a
  };
  std::vector<Task> stack{{u, v}};
  const std::size_t cap = 2 * static_cast<std::size_t>(g.n()) + 4;
  while (!stack.empty()) {
    Task task = stack.back();
    stack.pop_back();
    if (task.b == -1) {
      out.vertices.push_back(task.a);
      if (out.vertices.size() > cap) {
        throw GraphError("beer_edge_path: witness tables are inconsistent");
      }
      continue;
    }
    VertexId a = task.a, b = task.b;
    if (a == b) {
      if (g.is_beer(a)) {
        stack.push_back({a, -1});
        continue;
      }
      VertexId y = t.wit_vertex_[a];
      if (y < 0) throw GraphError("beer_edge_path: unreachable");
      // SP_B(a,a) = SP_B(a,y) followed by the edge back to a.
      stack.push_back({a, -1});
      stack.push_back({a, y});
      continue;
    }
    int e = norm.edge_id(a, b);
    if (g.is_beer(a) || g.is_beer(b)) {
      stack.push_back({b, -1});
      stack.push_back({a, -1});
      continue;
    }
    VertexId x = t.wit_edge_x_[e];
    bool left = t.wit_edge_left_[e] != 0;
    // Witness orientation is canonical (u < v); flip for a reversed walk.
    bool forward = a < b;
    if (!forward) left = !left;
    if (left) {
      // beer store on the a-side: SP_B(a,x) then b.
      stack.push_back({b, -1});
      stack.push_back({a, x});
    } else {
      stack.push_back({x, b});
      stack.push_back({a, -1});
    }
  }
  return out;
}

}  // namespace beerquery
