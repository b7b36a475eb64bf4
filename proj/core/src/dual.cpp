#include "beerquery/dual.hpp"

#include <algorithm>
#include <queue>

#include "beerquery/beer_base.hpp"

namespace beerquery {

DualTree::DualTree(const NormalizedGraph& norm, std::optional<NodeId> root_face)
    : norm_(&norm) {
  const BeerGraph& g = norm.graph;
  const VertexId n = g.n();
  if (n < 3 || !is_maximal(g)) {
    throw GraphError("build_dual: graph must be maximal with n >= 3");
  }

  // Ear clipping on the hull order: repeatedly remove the smallest-indexed
  // vertex of remaining degree two. Face ids follow extraction order.
  std::vector<VertexId> next(n), prev(n);
  std::vector<int> deg(n);
  for (VertexId i = 0; i < n; ++i) {
    next[i] = (i + 1 == n) ? 0 : i + 1;
    prev[i] = (i == 0) ? n - 1 : i - 1;
    deg[i] = norm.adj.degree(i);
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ears;
  for (VertexId i = 0; i < n; ++i) {
    if (deg[i] == 2) ears.push(i);
  }
  std::vector<char> removed(n, 0);
  faces_.reserve(n - 2);
  VertexId alive = n;
  while (alive > 3) {
    VertexId v = ears.top();
    ears.pop();
    if (removed[v] || deg[v] != 2) continue;
    VertexId p = prev[v], nx = next[v];
    std::array<VertexId, 3> tri{p, v, nx};
    std::sort(tri.begin(), tri.end());
    faces_.push_back(Face{tri});
    removed[v] = 1;
    next[p] = nx;
    prev[nx] = p;
    --alive;
    if (--deg[p] == 2) ears.push(p);
    if (--deg[nx] == 2) ears.push(nx);
  }
  {
    VertexId a = 0;
    while (removed[a]) ++a;
    std::array<VertexId, 3> tri{a, next[a], next[next[a]]};
    std::sort(tri.begin(), tri.end());
    faces_.push_back(Face{tri});
  }

  const NodeId fcount = static_cast<NodeId>(faces_.size());
  edge_faces_.assign(g.edges().size(), {-1, -1});
  face_edges_.resize(fcount);
  std::vector<std::pair<NodeId, NodeId>> dual_edges;
  dual_edges.reserve(fcount - 1);
  for (NodeId f = 0; f < fcount; ++f) {
    const Face& face = faces_[f];
    const std::array<std::pair<VertexId, VertexId>, 3> es{
        std::pair{face.v[1], face.v[2]},   // opposite v[0]
        std::pair{face.v[0], face.v[2]},   // opposite v[1]
        std::pair{face.v[0], face.v[1]}};  // opposite v[2]
    for (int k = 0; k < 3; ++k) {
      int id = norm.edge_id(es[k].first, es[k].second);
      if (id < 0) throw GraphError("build_dual: face edge missing");
      face_edges_[f][k] = id;
      if (edge_faces_[id][0] == -1) {
        edge_faces_[id][0] = f;
      } else {
        edge_faces_[id][1] = f;
        dual_edges.emplace_back(edge_faces_[id][0], f);
      }
    }
  }

  NodeId root = root_face.value_or(0);
  if (root < 0 || root >= fcount) throw GraphError("build_dual: bad root face");
  tree_ = RootedTree::from_edges(fcount, dual_edges, root);
  index_ = TreeIndex(tree_);

  parent_edge_.assign(fcount, -1);
  for (NodeId f = 0; f < fcount; ++f) {
    NodeId par = tree_.parent(f);
    if (par < 0) continue;
    for (int k = 0; k < 3; ++k) {
      int id = face_edges_[f][k];
      const auto& fs = edge_faces_[id];
      if ((fs[0] == f && fs[1] == par) || (fs[0] == par && fs[1] == f)) {
        parent_edge_[f] = id;
        break;
      }
    }
    if (parent_edge_[f] < 0) throw GraphError("build_dual: parent edge missing");
  }

  // P_v endpoints: the faces of v adjacent to at most one other face of v.
  // Singleton paths have both endpoints equal.
  std::vector<NodeId> end1(n, -1), end2(n, -1);
  for (NodeId f = 0; f < fcount; ++f) {
    for (VertexId x : faces_[f].v) {
      int neighbours_with_x = 0;
      for (int k = 0; k < 3; ++k) {
        int id = face_edges_[f][k];
        // Only edges incident to x can lead to another face containing x.
        if (faces_[f].v[k] == x) continue;
        const auto& fs = edge_faces_[id];
        NodeId other = fs[0] == f ? fs[1] : fs[0];
        if (other >= 0 && faces_[other].contains(x)) ++neighbours_with_x;
      }
      if (neighbours_with_x <= 1) {
        if (end1[x] == -1) {
          end1[x] = f;
        } else if (end2[x] == -1) {
          end2[x] = f;
        } else {
          throw GraphError("build_dual: P_v is not a path");
        }
      }
    }
  }
  std::vector<std::pair<NodeId, NodeId>> paths(n);
  for (VertexId x = 0; x < n; ++x) {
    if (end1[x] == -1) throw GraphError("build_dual: vertex in no face");
    if (end2[x] == -1) end2[x] = end1[x];
    if (end1[x] > end2[x]) std::swap(end1[x], end2[x]);
    paths[x] = {end1[x], end2[x]};
  }
  colours_ = ColourPathSet(index_, std::move(paths));
}

std::pair<VertexId, VertexId> DualTree::shared_edge(NodeId f1, NodeId f2) const {
  const Face& a = faces_[f1];
  const Face& b = faces_[f2];
  VertexId s[3];
  int k = 0;
  for (VertexId x : a.v) {
    if (b.contains(x)) s[k++] = x;
  }
  if (k != 2) throw GraphError("shared_edge: faces are not adjacent");
  return {s[0], s[1]};
}

DualTree build_dual(const NormalizedGraph& norm, std::optional<NodeId> root_face) {
  return DualTree(norm, root_face);
}

ChainSet::ChainSet(const DualTree& dual, const BeerBaseTables& tables)
    : dual_(&dual) {
  const NormalizedGraph& norm = dual.norm();
  const CsrAdjacency& adj = norm.adj;
  const VertexId n = adj.n();

  offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + adj.degree(v);
  vertices_.resize(offsets_[n]);
  prefix_.resize(offsets_[n]);
  reversed_.assign(n, 0);

  std::vector<double> surcharges(offsets_[n] - n);
  std::size_t max_chain_edges = 1;

  for (VertexId v = 0; v < n; ++v) {
    const int deg = adj.degree(v);
    const VertexId* nb = adj.neighbors(v);
    // CSR order is clockwise-cyclic from v; orient the chain to start at the
    // lower-numbered hull neighbour so the layout is embedding-canonical.
    bool rev = nb[0] > nb[deg - 1];
    reversed_[v] = rev ? 1 : 0;
    int base = offsets_[v];
    for (int i = 0; i < deg; ++i) {
      vertices_[base + i] = nb[rev ? deg - 1 - i : i];
    }
    double acc = 0.0;
    prefix_[base] = 0.0;
    for (int i = 0; i + 1 < deg; ++i) {
      VertexId a = vertices_[base + i];
      VertexId b = vertices_[base + i + 1];
      int id = norm.edge_id(a, b);
      if (id < 0) throw GraphError("build_chains: chain vertices not adjacent");
      double w = norm.graph.edges()[id].w.value();
      acc += w;
      prefix_[base + i + 1] = acc;
      surcharges[a_offset(v) + i] = tables.edge_beer_dist_by_id(id) - w;
    }
    max_chain_edges = std::max<std::size_t>(max_chain_edges, deg - 1);
  }
  rmq_ = RmqIndex(std::move(surcharges), max_chain_edges);
}

int ChainSet::position(VertexId v, VertexId u) const {
  const CsrAdjacency& adj = dual_->norm().adj;
  int s = adj.slot(v, u);
  if (s < 0) throw GraphError("chain: vertex not on rho_v");
  return reversed_[v] ? adj.degree(v) - 1 - s : s;
}

Weight ChainSet::chain_dist(VertexId v, VertexId u, VertexId w) const {
  double a = prefix_[offsets_[v] + position(v, u)];
  double b = prefix_[offsets_[v] + position(v, w)];
  return Weight(a < b ? b - a : a - b);
}

int ChainSet::min_detour(VertexId v, int lo, int hi) const {
  std::size_t base = a_offset(v);
  return static_cast<int>(rmq_.query(base + lo, base + hi) - base);
}

ChainSet build_chains(const DualTree& dual, const BeerBaseTables& tables) {
  return ChainSet(dual, tables);
}

}  // namespace beerquery
