#include "beerquery/normalize.hpp"

#include <algorithm>
#include <array>

namespace beerquery {

namespace {

struct Interval {
  VertexId l, r;
  int id;  // position in the sorted interval list
};

// Faces of a hull-complete outerplanar graph, derived from the laminar
// nesting of its edges viewed as intervals [u,v]. children[i] lists the
// maximal intervals nested directly inside interval i, left to right; they
// tile [l_i, r_i] because every hull edge is present.
struct IntervalForest {
  std::vector<Interval> intervals;          // sorted by (l asc, r desc)
  std::vector<std::vector<int>> children;   // by interval id
};

IntervalForest build_interval_forest(const BeerGraph& g) {
  IntervalForest f;
  f.intervals.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    f.intervals.push_back({e.u, e.v, 0});
  }
  std::sort(f.intervals.begin(), f.intervals.end(),
            [](const Interval& a, const Interval& b) {
              return a.l != b.l ? a.l < b.l : a.r > b.r;
            });
  for (std::size_t i = 0; i < f.intervals.size(); ++i) {
    f.intervals[i].id = static_cast<int>(i);
  }
  f.children.assign(f.intervals.size(), {});
  std::vector<int> stack;
  for (const Interval& iv : f.intervals) {
    while (!stack.empty() && f.intervals[stack.back()].r <= iv.l) stack.pop_back();
    if (!stack.empty()) f.children[stack.back()].push_back(iv.id);
    stack.push_back(iv.id);
  }
  return f;
}

// Face attached to interval i from the inside: the interval's endpoints plus
// the seam vertices of its child tiling. Width-1 intervals have no face.
std::vector<VertexId> face_of_interval(const IntervalForest& f, int i) {
  const Interval& iv = f.intervals[i];
  std::vector<VertexId> face{iv.l};
  VertexId at = iv.l;
  for (int c : f.children[i]) {
    if (f.intervals[c].l != at) {
      throw GraphError("internal error: face tiling has a gap");
    }
    at = f.intervals[c].r;
    face.push_back(at);
  }
  if (at != iv.r) throw GraphError("internal error: face tiling has a gap");
  return face;
}

}  // namespace

int NormalizedGraph::edge_id(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  const auto& es = graph.edges();
  auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(u, v),
                             [](const Edge& e, const std::pair<VertexId, VertexId>& key) {
                               return e.u != key.first ? e.u < key.first
                                                       : e.v < key.second;
                             });
  if (it == es.end() || it->u != u || it->v != v) return -1;
  return static_cast<int>(it - es.begin());
}

std::pair<BeerGraph, std::vector<std::pair<VertexId, VertexId>>> maximalize(
    const BeerGraph& g) {
  const VertexId n = g.n();
  if (n < 3) throw GraphError("maximalize: need n >= 3");

  std::vector<std::pair<VertexId, VertexId>> added;
  std::vector<Edge> edges = g.edges();

  // Step 1: complete the hull so the outer face is the Hamiltonian cycle.
  std::vector<char> have_hull(n, 0);
  for (const Edge& e : g.edges()) {
    if (e.v - e.u == 1) have_hull[e.u] = 1;
    if (e.u == 0 && e.v == n - 1) have_hull[n - 1] = 1;
  }
  for (VertexId i = 0; i < n; ++i) {
    if (have_hull[i]) continue;
    VertexId u = i, v = (i + 1 == n) ? 0 : i + 1;
    if (u > v) std::swap(u, v);
    edges.push_back({u, v, Weight::infinity()});
    added.emplace_back(u, v);
  }

  // Step 2: fan every non-triangular interior face from its smallest vertex.
  BeerGraph hulled(n, edges, g.beer());
  IntervalForest forest = build_interval_forest(hulled);
  std::vector<Edge> final_edges = hulled.edges();
  for (const Interval& iv : forest.intervals) {
    if (iv.r - iv.l < 2) continue;
    std::vector<VertexId> face = face_of_interval(forest, iv.id);
    for (std::size_t k = 2; k + 1 < face.size(); ++k) {
      final_edges.push_back({face[0], face[k], Weight::infinity()});
      added.emplace_back(face[0], face[k]);
    }
  }
  std::sort(added.begin(), added.end());
  return {BeerGraph(n, std::move(final_edges), g.beer()), std::move(added)};
}

std::pair<std::vector<Weight>, std::vector<VertexId>> enforce_gti(
    const BeerGraph& g) {
  if (!is_maximal(g)) throw GraphError("enforce_gti: graph must be maximal");

  std::vector<Weight> delta;
  delta.reserve(g.edges().size());
  for (const Edge& e : g.edges()) delta.push_back(e.w);
  std::vector<VertexId> parent(g.edges().size(), -1);

  auto edge_ix = [&](VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    const auto& es = g.edges();
    auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(u, v),
                               [](const Edge& e, const std::pair<VertexId, VertexId>& key) {
                                 return e.u != key.first ? e.u < key.first
                                                         : e.v < key.second;
                               });
    return static_cast<int>(it - es.begin());
  };
  auto relax = [&](VertexId x, VertexId y, VertexId w) {
    int exy = edge_ix(x, y);
    Weight cand = delta[edge_ix(x, w)] + delta[edge_ix(w, y)];
    if (cand < delta[exy]) {
      delta[exy] = cand;
      parent[exy] = w;
    }
  };

  // Triangular faces with their interval-tree structure; the face of interval
  // (a,b) shares edge (a,b) with its parent face.
  IntervalForest forest = build_interval_forest(g);
  std::vector<int> face_intervals;  // interval ids of width >= 2
  for (const Interval& iv : forest.intervals) {
    if (iv.r - iv.l >= 2) face_intervals.push_back(iv.id);
  }
  // Interval id order is a valid preorder: parents sort before children.
  if (face_intervals.empty()) throw GraphError("enforce_gti: no interior face");

  struct Tri {
    VertexId a, c, b;  // a < c < b; (a,b) is the edge shared with the parent
  };
  std::vector<Tri> tris;
  tris.reserve(face_intervals.size());
  for (int id : face_intervals) {
    std::vector<VertexId> face = face_of_interval(forest, id);
    if (face.size() != 3) throw GraphError("enforce_gti: non-triangular face");
    tris.push_back({face[0], face[1], face[2]});
  }

  // Post-order pass (reverse preorder): the parent-shared edge of each
  // non-root face picks up its root-far-side distance. tris[0] is the root
  // face attached to the closing hull edge.
  for (std::size_t i = tris.size(); i-- > 1;) {
    relax(tris[i].a, tris[i].b, tris[i].c);
  }

  // Pre-order pass: every edge of a face except the parent-shared one picks
  // up its root-side distance via the opposite face vertex.
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const Tri& t = tris[i];
    if (i == 0) relax(t.a, t.b, t.c);  // root face owns its closing edge too
    relax(t.a, t.c, t.b);
    relax(t.c, t.b, t.a);
  }

  return {std::move(delta), std::move(parent)};
}

NormalizedGraph normalize(const BeerGraph& g) {
  ValidationReport rep = validate(g);
  if (!rep.ok) throw GraphError("normalize: invalid graph: " + rep.violations.front());

  auto [maximal, added_pairs] = maximalize(g);
  auto [delta, parent] = enforce_gti(maximal);

  std::vector<Edge> edges = maximal.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].w = delta[i];

  NormalizedGraph norm;
  norm.graph = BeerGraph(g.n(), std::move(edges), g.beer());
  norm.original = g;
  norm.gti_parent = std::move(parent);
  norm.adj = CsrAdjacency(norm.graph);
  for (auto [u, v] : added_pairs) {
    norm.added_edges.push_back(norm.edge_id(u, v));
  }
  std::sort(norm.added_edges.begin(), norm.added_edges.end());
  return norm;
}

PathInG expand_edge(const NormalizedGraph& norm, VertexId u, VertexId v) {
  int id = norm.edge_id(u, v);
  if (id < 0) {
    throw GraphError("expand_edge: not an edge: (" + std::to_string(u) + "," +
                     std::to_string(v) + ")");
  }
  PathInG out;
  out.weight = norm.graph.edges()[id].w;
  out.vertices.push_back(u);
  std::vector<std::pair<VertexId, VertexId>> work{{u, v}};
  const std::size_t cap = static_cast<std::size_t>(norm.graph.n()) + 1;
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    VertexId p = norm.gti_parent[norm.edge_id(x, y)];
    if (p < 0) {
      out.vertices.push_back(y);
      if (out.vertices.size() > cap) {
        throw GraphError("expand_edge: parent map is inconsistent");
      }
    } else {
      work.emplace_back(p, y);
      work.emplace_back(x, p);
    }
  }
  return out;
}

}  // namespace beerquery
