#include <doctest.h>

#include <queue>
#include <random>
#include <string>

#include "beerquery/colour_paths.hpp"
#include "beerquery/path_sum.hpp"
#include "beerquery/rmq.hpp"
#include "beerquery/tree_index.hpp"

using namespace beerquery;

namespace {

RootedTree random_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NodeId> parent(n, -1);
  for (int v = 1; v < n; ++v) parent[v] = static_cast<NodeId>(rng() % v);
  return RootedTree(parent, 0);
}

// Edge-count distances by BFS; the independent oracle for path predicates.
std::vector<int> bfs_dist(const RootedTree& t, NodeId s) {
  std::vector<std::vector<NodeId>> adj(t.size());
  for (NodeId v = 0; v < t.size(); ++v) {
    if (t.parent(v) >= 0) {
      adj[v].push_back(t.parent(v));
      adj[t.parent(v)].push_back(v);
    }
  }
  std::vector<int> d(t.size(), -1);
  std::queue<NodeId> q;
  q.push(s);
  d[s] = 0;
  while (!q.empty()) {
    NodeId v = q.front();
    q.pop();
    for (NodeId u : adj[v]) {
      if (d[u] == -1) {
        d[u] = d[v] + 1;
        q.push(u);
      }
    }
  }
  return d;
}

}  // namespace

TEST_SUITE("tree-toolkit") {

TEST_CASE("levels and lca on small shapes") {
  RootedTree chain({-1, 0, 1}, 0);
  TreeIndex ci(chain);
  CHECK(ci.level(2) == 2);
  CHECK(ci.lca(1, 2) == 1);
  CHECK(ci.lca(2, 2) == 2);

  RootedTree star({-1, 0, 0, 0}, 0);
  TreeIndex si(star);
  CHECK(si.lca(1, 2) == 0);
  CHECK(si.in_subtree(1, 0));
  CHECK_FALSE(si.in_subtree(1, 2));
}

TEST_CASE("second_on_path on chains and stars") {
  RootedTree chain({-1, 0, 1, 2}, 0);
  TreeIndex ci(chain);
  CHECK(ci.second_on_path(0, 3) == 1);
  CHECK(ci.second_on_path(3, 0) == 2);
  CHECK_THROWS_AS(ci.second_on_path(1, 1), TreeError);

  RootedTree star({-1, 0, 0}, 0);
  TreeIndex si(star);
  CHECK(si.second_on_path(1, 2) == 0);
}

TEST_CASE("on_path basics") {
  RootedTree chain({-1, 0, 1, 2}, 0);
  TreeIndex ci(chain);
  CHECK(ci.on_path(0, 3, 0));  // endpoint
  CHECK(ci.on_path(0, 3, 2));
  CHECK_FALSE(ci.on_path(0, 1, 3));
}

TEST_CASE("on_path matches the BFS characterization exhaustively") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    RootedTree t = random_tree(20, seed);
    TreeIndex index(t);
    std::vector<std::vector<int>> d(t.size());
    for (NodeId v = 0; v < t.size(); ++v) d[v] = bfs_dist(t, v);
    for (NodeId u = 0; u < t.size(); ++u) {
      for (NodeId v = 0; v < t.size(); ++v) {
        for (NodeId w = 0; w < t.size(); ++w) {
          bool expect = d[u][w] + d[w][v] == d[u][v];
          CHECK(index.on_path(u, v, w) == expect);
        }
      }
    }
  }
}

TEST_CASE("second_on_path is adjacent and on the path") {
  RootedTree t = random_tree(40, 9);
  TreeIndex index(t);
  for (NodeId u = 0; u < t.size(); ++u) {
    for (NodeId v = 0; v < t.size(); ++v) {
      if (u == v) continue;
      NodeId s = index.second_on_path(u, v);
      CHECK((t.parent(s) == u || t.parent(u) == s));
      CHECK(index.on_path(u, v, s));
    }
  }
}

TEST_CASE("closest_colour verbatim cases") {
  // chain 0-1-2-3 rooted at 0; P_red covers {0,1}
  RootedTree chain({-1, 0, 1, 2}, 0);
  TreeIndex index(chain);
  ColourPathSet cps(index, {{0, 1}});
  CHECK(cps.closest_colour(index, 1, 3, 0) == 1);  // v below the whole path
  CHECK(cps.closest_colour(index, 0, 1, 0) == 1);  // v on the path: return v
  CHECK_THROWS_AS(cps.closest_colour(index, 3, 0, 0), TreeError);
}

TEST_CASE("closest_colour equals the BFS argmin over the path") {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    RootedTree t = random_tree(24, 100 + seed);
    TreeIndex index(t);
    // random colour paths: pairs of endpoints
    std::vector<std::pair<NodeId, NodeId>> paths;
    for (int c = 0; c < 8; ++c) {
      paths.emplace_back(static_cast<NodeId>(rng() % t.size()),
                         static_cast<NodeId>(rng() % t.size()));
    }
    ColourPathSet cps(index, paths);
    std::vector<std::vector<int>> d(t.size());
    for (NodeId v = 0; v < t.size(); ++v) d[v] = bfs_dist(t, v);
    for (int c = 0; c < 8; ++c) {
      for (NodeId u = 0; u < t.size(); ++u) {
        if (!cps.on_colour_path(index, c, u)) continue;
        for (NodeId v = 0; v < t.size(); ++v) {
          NodeId got = cps.closest_colour(index, u, v, c);
          CHECK(cps.on_colour_path(index, c, got));
          int best = std::numeric_limits<int>::max();
          for (NodeId w = 0; w < t.size(); ++w) {
            if (cps.on_colour_path(index, c, w)) best = std::min(best, d[v][w]);
          }
          CHECK(d[v][got] == best);
        }
      }
    }
  }
}

TEST_CASE("path_sum: one-edge fold") {
  RootedTree t({-1, 0}, 0);
  auto idx = build_path_sum<double>(t, {0.0, 7.5},
                                    [](double a, double b) { return std::min(a, b); });
  CHECK(idx.query(0, 1) == 7.5);
}

TEST_CASE("path_sum preserves fold order (string concatenation)") {
  RootedTree t({-1, 0, 1}, 0);
  std::vector<std::string> vals{"", "a", "b"};
  auto idx = build_path_sum<std::string>(
      t, vals, [](const std::string& a, const std::string& b) { return a + b; });
  CHECK(idx.query(0, 2) == "ab");
  CHECK(idx.query(2, 0) == "ba");
  CHECK_THROWS_AS(idx.query(1, 1), TreeError);
}

TEST_CASE("path_sum tracing semigroup returns the exact edge sequence") {
  RootedTree t = random_tree(30, 23);
  using Seq = std::vector<int>;
  std::vector<Seq> vals(t.size());
  for (NodeId v = 1; v < t.size(); ++v) vals[v] = {v};  // edge label = child id
  auto idx = build_path_sum<Seq>(t, vals, [](const Seq& a, const Seq& b) {
    Seq out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  });
  TreeIndex index(t);
  for (NodeId u = 0; u < t.size(); ++u) {
    for (NodeId v = 0; v < t.size(); ++v) {
      if (u == v) continue;
      // expected: climb u to lca (edges labeled by lower node), then descend
      Seq expect;
      NodeId a = index.lca(u, v);
      for (NodeId x = u; x != a; x = t.parent(x)) expect.push_back(x);
      Seq down;
      for (NodeId x = v; x != a; x = t.parent(x)) down.push_back(x);
      expect.insert(expect.end(), down.rbegin(), down.rend());
      CHECK(idx.query(u, v) == expect);
    }
  }
}

TEST_CASE("path_sum min agrees with a naive walk for all pairs") {
  RootedTree t = random_tree(50, 31);
  std::mt19937_64 rng(7);
  std::vector<double> vals(t.size(), 0.0);
  for (NodeId v = 1; v < t.size(); ++v) {
    vals[v] = static_cast<double>(rng() % 1000) / 16.0;
  }
  auto idx = build_path_sum<double>(t, vals,
                                    [](double a, double b) { return std::min(a, b); });
  TreeIndex index(t);
  for (NodeId u = 0; u < t.size(); ++u) {
    for (NodeId v = 0; v < t.size(); ++v) {
      if (u == v) continue;
      double naive = std::numeric_limits<double>::infinity();
      NodeId a = index.lca(u, v);
      for (NodeId x = u; x != a; x = t.parent(x)) naive = std::min(naive, vals[x]);
      for (NodeId x = v; x != a; x = t.parent(x)) naive = std::min(naive, vals[x]);
      CHECK(idx.query(u, v) == naive);
    }
  }
}

TEST_CASE("rmq basics and tie rule") {
  RmqIndex single({5.0});
  CHECK(single.query(0, 0) == 0);
  RmqIndex ties({3.0, 1.0, 2.0, 1.0});
  CHECK(ties.query(0, 3) == 1);  // leftmost tie
  CHECK(ties.query(2, 3) == 3);
  CHECK_THROWS_AS(ties.query(2, 9), std::out_of_range);
}

TEST_CASE("rmq agrees with a linear scan on random arrays") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<double> vals(1000);
    for (double& v : vals) v = static_cast<double>(rng() % 64);
    RmqIndex idx(vals);
    for (int q = 0; q < 4000; ++q) {
      std::size_t i = rng() % vals.size();
      std::size_t j = rng() % vals.size();
      if (i > j) std::swap(i, j);
      std::size_t best = i;
      for (std::size_t k = i + 1; k <= j; ++k) {
        if (vals[k] < vals[best]) best = k;
      }
      CHECK(idx.query(i, j) == best);
    }
  }
}

TEST_CASE("malformed trees are rejected") {
  CHECK_THROWS_AS(RootedTree({0, 1}, 0), TreeError);            // root has parent
  CHECK_THROWS_AS(RootedTree({-1, 2, 1}, 0), TreeError);        // cycle
  CHECK_THROWS_AS(RootedTree::from_edges(3, {{0, 1}}, 0), TreeError);
}

}  // TEST_SUITE
