#include "beerquery/harness.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "beerquery/engine.hpp"
#include "beerquery/normalize.hpp"

namespace beerquery {

SourceDistances oracle_beer_sssp(const BeerGraph& g, VertexId s) {
  const VertexId n = g.n();
  std::vector<std::vector<std::pair<VertexId, double>>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].emplace_back(e.v, e.w.value());
    adj[e.v].emplace_back(e.u, e.w.value());
  }
  const double inf = std::numeric_limits<double>::infinity();
  // State (v, flag): flag set once a beer store has been visited.
  std::vector<std::array<double, 2>> d(n, {inf, inf});
  using Item = std::tuple<double, VertexId, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  int start_flag = g.is_beer(s) ? 1 : 0;
  d[s][start_flag] = 0.0;
  pq.emplace(0.0, s, start_flag);
  while (!pq.empty()) {
    auto [dist, v, flag] = pq.top();
    pq.pop();
    if (dist != d[v][flag]) continue;
    for (auto [u, w] : adj[v]) {
      int nf = flag | (g.is_beer(u) ? 1 : 0);
      double nd = dist + w;
      if (nd < d[u][nf]) {
        d[u][nf] = nd;
        pq.emplace(nd, u, nf);
      }
    }
  }
  SourceDistances out;
  out.dist.resize(n);
  out.dist_b.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    out.dist[v] = std::min(d[v][0], d[v][1]);
    out.dist_b[v] = d[v][1];
  }
  return out;
}

OracleTables oracle_all_pairs(const BeerGraph& g) {
  OracleTables t;
  t.n = g.n();
  t.dist.resize(static_cast<std::size_t>(t.n) * t.n);
  t.dist_b.resize(static_cast<std::size_t>(t.n) * t.n);
  for (VertexId s = 0; s < t.n; ++s) {
    SourceDistances sd = oracle_beer_sssp(g, s);
    std::copy(sd.dist.begin(), sd.dist.end(),
              t.dist.begin() + static_cast<std::size_t>(s) * t.n);
    std::copy(sd.dist_b.begin(), sd.dist_b.end(),
              t.dist_b.begin() + static_cast<std::size_t>(s) * t.n);
  }
  return t;
}

namespace {

// Weights are snapped to a 2^-20 grid: sums of up to millions of such values
// are exact in doubles, so equality checks in the harness corpus never hinge
// on association order.
double draw_weight(std::mt19937_64& rng) {
  double u = 0.5 + 1.5 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
  double snapped = std::nearbyint(u * 1048576.0) / 1048576.0;
  return std::min(2.0, std::max(0.5, snapped));
}

std::vector<VertexId> draw_stores(std::mt19937_64& rng, VertexId n,
                                  double beer_fraction) {
  long long k = std::llround(beer_fraction * n);
  k = std::max(0LL, std::min<long long>(k, n));
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  for (long long i = 0; i < k; ++i) {
    std::uniform_int_distribution<long long> pick(i, n - 1);
    std::swap(ids[i], ids[pick(rng)]);
  }
  ids.resize(k);
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Uniform plane binary tree with `leaves` leaves (Remy's growth process),
// returned as the chord set of the matching polygon triangulation.
std::vector<std::pair<VertexId, VertexId>> random_triangulation_chords(
    VertexId n, std::mt19937_64& rng) {
  const int leaves = n - 1;
  if (leaves < 2) return {};
  const int total = 2 * leaves - 1;
  std::vector<int> left(total, -1), right(total, -1), parent(total, -1);
  int root = 0;
  // Nodes 2j-1 are internal, 2j are leaves (node 0 is the first leaf).
  for (int j = 1; j < leaves; ++j) {
    int internal = 2 * j - 1;
    int leaf = 2 * j;
    std::uniform_int_distribution<int> pick_node(0, 2 * j - 2);
    int x = pick_node(rng);
    int side = static_cast<int>(rng() & 1);
    int p = parent[x];
    if (side == 0) {
      left[internal] = x;
      right[internal] = leaf;
    } else {
      left[internal] = leaf;
      right[internal] = x;
    }
    parent[x] = internal;
    parent[leaf] = internal;
    parent[internal] = p;
    if (p == -1) {
      root = internal;
    } else if (left[p] == x) {
      left[p] = internal;
    } else {
      right[p] = internal;
    }
  }

  // Leaves left-to-right are hull edges (i, i+1); each internal node's span
  // is a polygon edge, and non-root spans are exactly the chords.
  std::vector<int> leaves_below(total, 0);
  std::vector<int> order;
  order.reserve(total);
  {
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      if (left[v] >= 0) {
        stack.push_back(left[v]);
        stack.push_back(right[v]);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    leaves_below[v] = left[v] < 0 ? 1 : leaves_below[left[v]] + leaves_below[right[v]];
  }
  std::vector<std::pair<VertexId, VertexId>> chords;
  chords.reserve(n >= 3 ? n - 3 : 0);
  // Intervals top-down.
  std::vector<std::pair<int, int>> span(total);
  std::vector<int> stack{root};
  span[root] = {0, n - 1};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    auto [a, b] = span[v];
    if (v != root && b - a >= 2) {
      chords.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    if (left[v] >= 0) {
      int c = a + leaves_below[left[v]];
      span[left[v]] = {a, c};
      span[right[v]] = {c, b};
      stack.push_back(left[v]);
      stack.push_back(right[v]);
    }
  }
  return chords;
}

BeerGraph assemble(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& chords,
                   std::mt19937_64& rng, double beer_fraction) {
  std::vector<Edge> edges;
  edges.reserve(n + chords.size());
  for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, static_cast<VertexId>(i + 1), Weight(0.0)});
  if (n >= 3) edges.push_back({0, static_cast<VertexId>(n - 1), Weight(0.0)});
  for (auto [a, b] : chords) edges.push_back({a, b, Weight(0.0)});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (Edge& e : edges) e.w = Weight(draw_weight(rng));
  std::vector<VertexId> beer = draw_stores(rng, n, beer_fraction);
  return BeerGraph(n, std::move(edges), std::move(beer));
}

}  // namespace

BeerGraph gen_random_maximal(VertexId n, std::uint64_t seed, double beer_fraction) {
  if (n < 3 || beer_fraction < 0.0 || beer_fraction > 1.0) {
    throw GraphError("gen_random_maximal: need n >= 3 and beer_fraction in [0,1]");
  }
  std::mt19937_64 rng(seed);
  auto chords = random_triangulation_chords(n, rng);
  BeerGraph raw = assemble(n, chords, rng, beer_fraction);
  // Repair the generalized triangle inequality so instances are immediately
  // usable by the query structures.
  return normalize(raw).graph;
}

BeerGraph gen_random_outerplanar(VertexId n, std::uint64_t seed,
                                 double chord_keep_prob, double beer_fraction) {
  if (n < 3 || chord_keep_prob < 0.0 || chord_keep_prob > 1.0 ||
      beer_fraction < 0.0 || beer_fraction > 1.0) {
    throw GraphError("gen_random_outerplanar: bad parameters");
  }
  std::mt19937_64 rng(seed);
  auto chords = random_triangulation_chords(n, rng);
  std::sort(chords.begin(), chords.end());
  std::vector<std::pair<VertexId, VertexId>> kept;
  for (auto c : chords) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < chord_keep_prob) kept.push_back(c);
  }
  return assemble(n, kept, rng, beer_fraction);
}

BeerGraph gen_random_tree(VertexId n, std::uint64_t seed, double beer_fraction) {
  if (n < 1) throw GraphError("gen_random_tree: need n >= 1");
  std::mt19937_64 rng(seed);
  // A spanning tree of an outerplanar graph keeps the non-crossing embedding.
  std::vector<std::pair<VertexId, VertexId>> pool;
  if (n >= 3) {
    pool = random_triangulation_chords(n, rng);
  }
  for (VertexId i = 0; i + 1 < n; ++i) pool.emplace_back(i, i + 1);
  if (n >= 3) pool.emplace_back(0, n - 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<VertexId> dsu(n);
  std::iota(dsu.begin(), dsu.end(), 0);
  auto find = [&](VertexId x) {
    while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
    return x;
  };
  std::vector<Edge> edges;
  for (auto [a, b] : pool) {
    VertexId ra = find(a), rb = find(b);
    if (ra == rb) continue;
    dsu[ra] = rb;
    edges.push_back({a, b, Weight(0.0)});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (Edge& e : edges) e.w = Weight(draw_weight(rng));
  std::vector<VertexId> beer = draw_stores(rng, n, beer_fraction);
  return BeerGraph(n, std::move(edges), std::move(beer));
}

BeerGraph gen_zigzag_maximal(VertexId n, std::vector<VertexId> beer) {
  if (n < 3) throw GraphError("gen_zigzag_maximal: need n >= 3");
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, static_cast<VertexId>(i + 1), Weight(1.0)});
  edges.push_back({0, static_cast<VertexId>(n - 1), Weight(1.0)});
  VertexId lo = 0, hi = n - 1;
  bool from_low = true;
  while (hi - lo >= 2) {
    if (from_low) {
      ++lo;
    } else {
      --hi;
    }
    if (hi - lo >= 2) edges.push_back({lo, hi, Weight(1.0)});
    from_low = !from_low;
  }
  return BeerGraph(n, std::move(edges), std::move(beer));
}

ReductionInstance reduce_path_min(const RootedTree& tree,
                                  const std::vector<double>& edge_values) {
  const NodeId n = tree.size();
  if (n < 2) throw GraphError("reduce_path_min: degenerate tree");

  ReductionInstance inst;
  inst.tree = tree;
  inst.tree_index = TreeIndex(inst.tree);
  inst.values.reserve(n - 1);

  // T' layout before relabeling: original nodes keep their ids; each edge e
  // (indexed by its child node) gets x_e and x'_e.
  struct RawEdge {
    int a, b;
    double w;
  };
  std::vector<RawEdge> raw;
  std::vector<int> x_of(n, -1), xs_of(n, -1);
  int next = n;
  std::vector<std::pair<int, int>> edge_nodes;
  for (NodeId v = 0; v < n; ++v) {
    if (v == tree.root()) continue;
    double s = edge_values[v];
    if (!(s > 0.0 && s < 1.0)) {
      throw GraphError("reduce_path_min: edge values must lie in (0,1)");
    }
    int xe = next++;
    int xse = next++;
    x_of[v] = xe;
    xs_of[v] = xse;
    raw.push_back({tree.parent(v), xe, 1.0});
    raw.push_back({xe, v, 1.0});
    raw.push_back({xe, xse, s});
    edge_nodes.emplace_back(tree.parent(v), v);
    inst.values.push_back(s);
  }
  const int total = next;  // 3n - 2

  // Relabel by preorder so the tree edges are non-crossing chords under the
  // clockwise numbering convention.
  std::vector<std::vector<std::pair<int, double>>> adj(total);
  for (const RawEdge& e : raw) {
    adj[e.a].emplace_back(e.b, e.w);
    adj[e.b].emplace_back(e.a, e.w);
  }
  // Preorder labels keep every subtree contiguous, which makes the tree's
  // edges non-crossing chords under the clockwise numbering.
  std::vector<VertexId> label(total, -1);
  {
    VertexId next_label = 0;
    std::vector<int> stack{tree.root()};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (label[v] != -1) continue;
      label[v] = next_label++;
      for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it) {
        if (label[it->first] == -1) stack.push_back(it->first);
      }
    }
  }

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& e : raw) {
    edges.push_back({label[e.a], label[e.b], Weight(e.w)});
  }
  std::vector<VertexId> beer;
  inst.node_of.resize(n);
  for (NodeId v = 0; v < n; ++v) inst.node_of[v] = label[v];
  int k = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (v == tree.root()) continue;
    inst.edge_gadget.emplace_back(label[x_of[v]], label[xs_of[v]]);
    beer.push_back(label[xs_of[v]]);
    ++k;
  }
  inst.edge_nodes = std::move(edge_nodes);
  inst.beer_tree = BeerGraph(total, std::move(edges), std::move(beer));
  return inst;
}

std::pair<double, int> answer_path_min(const ReductionInstance& inst,
                                       QueryEngine& engine, int u, int v) {
  if (u == v) throw GraphError("answer_path_min: need distinct nodes");
  int len = inst.tree_index.path_length(u, v);
  double db = engine.query_beer_dist(inst.node_of[u], inst.node_of[v]).value();
  double recovered = (db - 2.0 * len) / 2.0;

  PathInG walk = engine.query_beer_path(inst.node_of[u], inst.node_of[v]);
  int edge_ix = -1;
  std::vector<int> store_to_edge(inst.beer_tree.n(), -1);
  for (std::size_t e = 0; e < inst.edge_gadget.size(); ++e) {
    store_to_edge[inst.edge_gadget[e].second] = static_cast<int>(e);
  }
  for (VertexId w : walk.vertices) {
    if (store_to_edge[w] >= 0) {
      edge_ix = store_to_edge[w];
      break;
    }
  }
  return {recovered, edge_ix};
}

}  // namespace beerquery
