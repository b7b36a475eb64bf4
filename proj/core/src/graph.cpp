#include "beerquery/graph.hpp"

#include <algorithm>
#include <numeric>

namespace beerquery {

BeerGraph::BeerGraph(VertexId n, std::vector<Edge> edges,
                     std::vector<VertexId> beer)
    : n_(n), edges_(std::move(edges)), beer_(std::move(beer)) {
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  std::sort(beer_.begin(), beer_.end());
  beer_.erase(std::unique(beer_.begin(), beer_.end()), beer_.end());
}

bool BeerGraph::is_beer(VertexId v) const {
  return std::binary_search(beer_.begin(), beer_.end(), v);
}

namespace {

struct Dsu {
  std::vector<VertexId> parent;
  explicit Dsu(VertexId n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  VertexId find(VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(VertexId a, VertexId b) { parent[find(a)] = find(b); }
};

bool is_hull_edge(VertexId u, VertexId v, VertexId n) {
  return v - u == 1 || (u == 0 && v == n - 1);
}

}  // namespace

ValidationReport validate(const BeerGraph& g) {
  ValidationReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };

  const VertexId n = g.n();
  if (n <= 0) {
    fail("empty graph");
    return report;
  }
  for (VertexId b : g.beer()) {
    if (b < 0 || b >= n) fail("beer vertex " + std::to_string(b) + " out of range");
  }

  for (const Edge& e : g.edges()) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      fail("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
           ") out of range");
      return report;
    }
    if (e.u == e.v) fail("self-loop at " + std::to_string(e.u));
    // +inf is a legal in-memory weight (assigned during maximalization);
    // file inputs reject it at parse time.
    if (!(e.w.value() > 0.0)) {
      fail("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
           ") weight must be positive");
    }
  }
  for (std::size_t i = 1; i < g.edges().size(); ++i) {
    const Edge& a = g.edges()[i - 1];
    const Edge& b = g.edges()[i];
    if (a.u == b.u && a.v == b.v) {
      fail("parallel edge (" + std::to_string(a.u) + "," + std::to_string(a.v) +
           ")");
    }
  }

  if (static_cast<long long>(g.edges().size()) > 2LL * n - 3 && n >= 2) {
    fail("edge count " + std::to_string(g.edges().size()) + " exceeds 2n-3");
  }

  // Non-crossing: chords (a,b),(c,d) with a<b, c<d must not interleave.
  std::vector<const Edge*> chords;
  for (const Edge& e : g.edges()) {
    if (!is_hull_edge(e.u, e.v, n)) chords.push_back(&e);
  }
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      VertexId a = chords[i]->u, b = chords[i]->v;
      VertexId c = chords[j]->u, d = chords[j]->v;
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) {
        fail("crossing chords (" + std::to_string(a) + "," + std::to_string(b) +
             "),(" + std::to_string(c) + "," + std::to_string(d) + ")");
      }
    }
  }

  if (n >= 1) {
    Dsu dsu(n);
    for (const Edge& e : g.edges()) dsu.unite(e.u, e.v);
    VertexId root = dsu.find(0);
    for (VertexId v = 1; v < n; ++v) {
      if (dsu.find(v) != root) {
        fail("disconnected");
        break;
      }
    }
  }

  return report;
}

bool is_maximal(const BeerGraph& g) {
  ValidationReport report = validate(g);
  if (!report.ok) {
    throw GraphError("is_maximal: invalid graph: " + report.violations.front());
  }
  const VertexId n = g.n();
  if (n < 3) return false;
  if (static_cast<long long>(g.edges().size()) != 2LL * n - 3) return false;
  // With non-crossing already validated, 2n-3 edges and a complete outer
  // cycle force every interior face to be a triangle.
  std::vector<char> hull_present(n, 0);
  for (const Edge& e : g.edges()) {
    if (e.v - e.u == 1) hull_present[e.u] = 1;
    if (e.u == 0 && e.v == n - 1) hull_present[n - 1] = 1;
  }
  for (VertexId i = 0; i < n; ++i) {
    if (!hull_present[i]) return false;
  }
  return true;
}

bool satisfies_gti(const BeerGraph& g, const std::vector<double>& all_pairs_dist) {
  const std::size_t n = static_cast<std::size_t>(g.n());
  if (all_pairs_dist.size() != n * n) {
    throw GraphError("satisfies_gti: distance table dimension mismatch");
  }
  for (const Edge& e : g.edges()) {
    double d = all_pairs_dist[static_cast<std::size_t>(e.u) * n + e.v];
    if (!weights_close(d, e.w.value())) return false;
  }
  return true;
}

CsrAdjacency::CsrAdjacency(const BeerGraph& g) : n_(g.n()) {
  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : g.edges()) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (VertexId v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  targets_.resize(offsets_[n_]);
  weights_.resize(offsets_[n_]);
  std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : g.edges()) {
    targets_[cursor[e.u]] = e.v;
    weights_[cursor[e.u]++] = e.w;
    targets_[cursor[e.v]] = e.u;
    weights_[cursor[e.v]++] = e.w;
  }
  // Sort each vertex's neighbors by clockwise cyclic offset.
  std::vector<std::pair<VertexId, Weight>> buf;
  for (VertexId v = 0; v < n_; ++v) {
    buf.clear();
    for (int i = offsets_[v]; i < offsets_[v + 1]; ++i) {
      buf.emplace_back(targets_[i], weights_[i]);
    }
    std::sort(buf.begin(), buf.end(),
              [&](const auto& a, const auto& b) {
                auto key = [&](VertexId u) {
                  VertexId d = u - v;
                  return d < 0 ? d + n_ : d;
                };
                return key(a.first) < key(b.first);
              });
    for (std::size_t i = 0; i < buf.size(); ++i) {
      targets_[offsets_[v] + static_cast<int>(i)] = buf[i].first;
      weights_[offsets_[v] + static_cast<int>(i)] = buf[i].second;
    }
  }
}

int CsrAdjacency::slot(VertexId v, VertexId u) const {
  auto key = [&](VertexId x) {
    VertexId d = x - v;
    return d < 0 ? d + n_ : d;
  };
  const VertexId* begin = &targets_[offsets_[v]];
  const VertexId* end = &targets_[0] + offsets_[v + 1];
  const VertexId* it = std::lower_bound(
      begin, end, u, [&](VertexId a, VertexId b) { return key(a) < key(b); });
  if (it != end && *it == u) return static_cast<int>(it - begin);
  return -1;
}

Weight CsrAdjacency::edge_weight(VertexId u, VertexId v) const {
  int s = slot(u, v);
  if (s < 0) {
    throw GraphError("not an edge: (" + std::to_string(u) + "," +
                     std::to_string(v) + ")");
  }
  return weights_[offsets_[u] + s];
}

}  // namespace beerquery
