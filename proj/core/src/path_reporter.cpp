#include "beerquery/path_reporter.hpp"

#include <algorithm>

namespace beerquery {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void append_walk(std::vector<VertexId>& out, const std::vector<VertexId>& piece) {
  if (out.empty()) {
    out = piece;
    return;
  }
  if (piece.empty() || out.back() != piece.front()) {
    throw GraphError("path assembly: segments do not join");
  }
  out.insert(out.end(), piece.begin() + 1, piece.end());
}
}  // namespace

PathReporter::PathReporter(const DualTree& dual, const BeerBaseTables& tables,
                           const ChainSet& chains, const BeerDistanceOracle& oracle)
    : dual_(&dual), tables_(&tables), chains_(&chains), oracle_(&oracle) {}

bool PathReporter::in_fan(VertexId v, VertexId x) const {
  // G[P_v] is v plus its neighbourhood.
  return x == v || dual_->norm().adj.has_edge(v, x);
}

void PathReporter::check_fan(VertexId v, VertexId x) const {
  if (!in_fan(v, x)) {
    throw GraphError("fan query: vertex " + std::to_string(x) +
                     " is not in the fan of " + std::to_string(v));
  }
}

double PathReporter::edge_w(VertexId a, VertexId b) const {
  const NormalizedGraph& norm = dual_->norm();
  int e = norm.edge_id(a, b);
  if (e < 0) throw GraphError("fan query: missing edge");
  return norm.graph.edges()[e].w.value();
}

double PathReporter::edge_db(VertexId a, VertexId b) const {
  const NormalizedGraph& norm = dual_->norm();
  int e = norm.edge_id(a, b);
  if (e < 0) throw GraphError("fan query: missing edge");
  return tables_->edge_beer_dist_by_id(e);
}

Weight PathReporter::fan_dist(VertexId v, VertexId u, VertexId w) const {
  check_fan(v, u);
  check_fan(v, w);
  if (u == w) return Weight(0.0);
  if (u == v || w == v) return Weight(edge_w(u, w));
  Weight chain = chains_->chain_dist(v, u, w);
  return min(Weight(edge_w(u, v) + edge_w(v, w)), chain);
}

PathInG PathReporter::fan_sp(VertexId v, VertexId u, VertexId w) const {
  check_fan(v, u);
  check_fan(v, w);
  PathInG out;
  if (u == w) {
    out.vertices = {u};
    out.weight = Weight(0.0);
    return out;
  }
  if (u == v || w == v) {
    out.vertices = {u, w};
    out.weight = Weight(edge_w(u, w));
    return out;
  }
  double through_v = edge_w(u, v) + edge_w(v, w);
  double chain = chains_->chain_dist(v, u, w).value();
  if (through_v <= chain) {
    out.vertices = {u, v, w};
    out.weight = Weight(through_v);
    return out;
  }
  int pu = chains_->position(v, u);
  int pw = chains_->position(v, w);
  int step = pu < pw ? 1 : -1;
  for (int p = pu;; p += step) {
    out.vertices.push_back(chains_->chain_vertex(v, p));
    if (p == pw) break;
  }
  out.weight = Weight(chain);
  return out;
}

Weight PathReporter::fan_beer_dist(VertexId v, VertexId u, VertexId w) const {
  check_fan(v, u);
  check_fan(v, w);
  if (u == w) return Weight(tables_->vertex_beer_dist(u));
  if (u == v || w == v) return Weight(edge_db(u, w));
  double through_v =
      std::min(edge_db(u, v) + edge_w(v, w), edge_w(u, v) + edge_db(v, w));
  int pu = chains_->position(v, u);
  int pw = chains_->position(v, w);
  int lo = std::min(pu, pw), hi = std::max(pu, pw);
  int detour = chains_->min_detour(v, lo, hi - 1);
  double chain = chains_->chain_dist(v, u, w).value() +
                 chains_->detour_value(v, detour);
  return Weight(std::min(through_v, chain));
}

PathInG PathReporter::fan_beer_path(VertexId v, VertexId u, VertexId w) const {
  check_fan(v, u);
  check_fan(v, w);
  if (u == w) return beer_edge_path(*dual_, *tables_, u, u);
  if (u == v || w == v) return beer_edge_path(*dual_, *tables_, u, w);

  double c1 = edge_db(u, v) + edge_w(v, w);
  double c2 = edge_w(u, v) + edge_db(v, w);
  int pu = chains_->position(v, u);
  int pw = chains_->position(v, w);
  int lo = std::min(pu, pw), hi = std::max(pu, pw);
  int detour = chains_->min_detour(v, lo, hi - 1);
  double c3 = chains_->chain_dist(v, u, w).value() +
              chains_->detour_value(v, detour);
  double best = std::min({c1, c2, c3});
  if (best == kInf) throw GraphError("fan_beer_path: unreachable");

  PathInG out;
  out.weight = Weight(best);
  if (c1 == best) {
    out.vertices = beer_edge_path(*dual_, *tables_, u, v).vertices;
    out.vertices.push_back(w);
    return out;
  }
  if (c2 == best) {
    // Edge step u -> v, then the beer walk from v to w.
    out.vertices.push_back(u);
    const auto piece = beer_edge_path(*dual_, *tables_, v, w).vertices;
    out.vertices.insert(out.vertices.end(), piece.begin(), piece.end());
    return out;
  }
  // Chain route: walk the chain, replacing the detour edge by its beer path.
  int step = pu < pw ? 1 : -1;
  out.vertices.push_back(chains_->chain_vertex(v, pu));
  for (int p = pu; p != pw; p += step) {
    int q = p + step;
    // A_v index of the chain edge between positions p and q.
    int edge_ix = step > 0 ? p : q;
    if (edge_ix == detour) {
      VertexId x = chains_->chain_vertex(v, p);
      VertexId y = chains_->chain_vertex(v, q);
      append_walk(out.vertices, beer_edge_path(*dual_, *tables_, x, y).vertices);
    } else {
      out.vertices.push_back(chains_->chain_vertex(v, q));
    }
  }
  return out;
}

DagH PathReporter::build_dag(VertexId s, VertexId t) const {
  if (in_fan(s, t)) throw GraphError("build_dag: t lies in the fan of s");
  const TreeIndex& index = dual_->index();
  const ColourPathSet& colours = dual_->colours();
  const NodeId f_t = dual_->face_of(t);

  DagH dag;
  dag.columns.push_back({});
  dag.columns.back().v[0] = s;
  dag.columns.back().size = 1;

  NodeId f_cur = colours.closest_colour(index, dual_->face_of(s), f_t, s);
  NodeId f_next = index.second_on_path(f_cur, f_t);
  auto [e0a, e0b] = dual_->shared_edge(f_cur, f_next);
  VertexId a = std::min(e0a, e0b), b = std::max(e0a, e0b);
  VertexId ctx = s;

  const NodeId guard = dual_->face_count() + 2;
  NodeId steps = 0;
  while (true) {
    if (++steps > guard) throw GraphError("build_dag: no progress");
    // Add the column {a, b}, entered through the fan of ctx.
    DagH::Column col;
    col.v = {a, b};
    col.size = 2;
    col.fan_ctx = ctx;
    const DagH::Column& prev = dag.columns.back();
    for (int i = 0; i < prev.size; ++i) {
      for (int j = 0; j < 2; ++j) {
        col.edge_dist[i][j] = fan_dist(ctx, prev.v[i], col.v[j]).value();
        col.edge_beer[i][j] = fan_beer_dist(ctx, prev.v[i], col.v[j]).value();
      }
    }
    dag.columns.push_back(col);

    // Pick the next face: prefer continuing along P_b, falling back to P_a
    // when the b-side face still contains a.
    NodeId fb = colours.closest_colour(index, f_next, f_t, b);
    NodeId f_i;
    if (!dual_->face_has_vertex(fb, a)) {
      f_i = fb;
      ctx = b;
    } else {
      f_i = colours.closest_colour(index, f_next, f_t, a);
      ctx = a;
    }
    if (dual_->face_has_vertex(f_i, t)) {
      DagH::Column last;
      last.v[0] = t;
      last.size = 1;
      last.fan_ctx = ctx;
      const DagH::Column& pcol = dag.columns.back();
      for (int i = 0; i < pcol.size; ++i) {
        last.edge_dist[i][0] = fan_dist(ctx, pcol.v[i], t).value();
        last.edge_beer[i][0] = fan_beer_dist(ctx, pcol.v[i], t).value();
      }
      dag.columns.push_back(last);
      break;
    }
    f_cur = f_i;
    f_next = index.second_on_path(f_cur, f_t);
    auto [ea, eb] = dual_->shared_edge(f_cur, f_next);
    a = std::min(ea, eb);
    b = std::max(ea, eb);
  }

  // Left-to-right dynamic program; ties take the first-listed expression.
  auto& cols = dag.columns;
  cols[0].dist[0] = 0.0;
  cols[0].beer[0] = kInf;  // handled by the listed beer expressions
  for (std::size_t i = 1; i < cols.size(); ++i) {
    DagH::Column& cur = cols[i];
    const DagH::Column& prev = cols[i - 1];
    for (int j = 0; j < cur.size; ++j) {
      if (i == 1) {
        // Edges out of s carry global values already.
        cur.dist[j] = cur.edge_dist[0][j];
        cur.beer[j] = cur.edge_beer[0][j];
        cur.bp_dist[j] = 0;
        cur.bp_beer_pred[j] = 0;
        cur.bp_beer_last[j] = 1;
        continue;
      }
      double best_d = kInf;
      int bp_d = -1;
      for (int p = 0; p < prev.size; ++p) {
        double cand = prev.dist[p] + cur.edge_dist[p][j];
        if (cand < best_d) {
          best_d = cand;
          bp_d = p;
        }
      }
      cur.dist[j] = best_d;
      cur.bp_dist[j] = bp_d;

      double best_b = kInf;
      int bp_pred = -1;
      char bp_last = 0;
      for (int p = 0; p < prev.size; ++p) {
        double c_beer_prefix = prev.beer[p] + cur.edge_dist[p][j];
        if (c_beer_prefix < best_b) {
          best_b = c_beer_prefix;
          bp_pred = p;
          bp_last = 0;
        }
        double c_beer_last = prev.dist[p] + cur.edge_beer[p][j];
        if (c_beer_last < best_b) {
          best_b = c_beer_last;
          bp_pred = p;
          bp_last = 1;
        }
      }
      cur.beer[j] = best_b;
      cur.bp_beer_pred[j] = bp_pred;
      cur.bp_beer_last[j] = bp_last;
    }
  }
  return dag;
}

PathInG PathReporter::query_beer_path(VertexId s, VertexId t) const {
  if (s == t) return beer_edge_path(*dual_, *tables_, s, s);
  if (in_fan(s, t)) return beer_edge_path(*dual_, *tables_, s, t);

  DagH dag = build_dag(s, t);
  const auto& cols = dag.columns;
  const std::size_t last = cols.size() - 1;
  if (cols[last].beer[0] == kInf) {
    throw GraphError("query_beer_path: no beer store reachable");
  }

  // Backtrack the beer chain, then expand each DAG edge inside its fan.
  struct Hop {
    std::size_t col;
    int slot;
    bool beer;
  };
  std::vector<Hop> hops;
  std::size_t col = last;
  int slot = 0;
  bool beer_state = true;
  while (col > 0) {
    bool last_beer;
    int pred;
    if (beer_state) {
      pred = cols[col].bp_beer_pred[slot];
      last_beer = cols[col].bp_beer_last[slot] != 0;
      beer_state = !last_beer;
    } else {
      pred = cols[col].bp_dist[slot];
      last_beer = false;
    }
    hops.push_back({col, slot, last_beer});
    slot = pred;
    --col;
  }
  std::reverse(hops.begin(), hops.end());

  PathInG out;
  out.weight = Weight(cols[last].beer[0]);
  int cur_slot = 0;
  for (const Hop& h : hops) {
    VertexId from = cols[h.col - 1].v[cur_slot];
    VertexId to = cols[h.col].v[h.slot];
    VertexId ctx = cols[h.col].fan_ctx;
    PathInG piece = h.beer ? fan_beer_path(ctx, from, to) : fan_sp(ctx, from, to);
    append_walk(out.vertices, piece.vertices);
    cur_slot = h.slot;
  }
  return out;
}

}  // namespace beerquery
