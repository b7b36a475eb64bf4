#include <doctest.h>

#include "beerquery/fixtures.hpp"
#include "beerquery/harness.hpp"
#include "beerquery/normalize.hpp"

using namespace beerquery;

namespace {

BeerGraph star4() {
  return BeerGraph(4, {{0, 1, Weight(1)}, {0, 2, Weight(1)}, {0, 3, Weight(1)}},
                   {3});
}

BeerGraph path3() {
  return BeerGraph(3, {{0, 1, Weight(1)}, {1, 2, Weight(1)}}, {});
}

}  // namespace

TEST_SUITE("normalize") {

TEST_CASE("maximalize leaves maximal graphs unchanged") {
  auto [g, added] = maximalize(fix_f4());
  CHECK(added.empty());
  CHECK(g == fix_f4());
}

TEST_CASE("maximalize triangulates a path") {
  auto [g, added] = maximalize(path3());
  REQUIRE(added.size() == 1);
  CHECK(added[0] == std::pair<VertexId, VertexId>{0, 2});
  CHECK(is_maximal(g));
  int id = -1;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (g.edges()[i].u == 0 && g.edges()[i].v == 2) id = static_cast<int>(i);
  }
  REQUIRE(id >= 0);
  CHECK_FALSE(g.edges()[id].w.finite());
}

TEST_CASE("maximalize on the star adds two infinite edges") {
  auto [g, added] = maximalize(star4());
  CHECK(g.edges().size() == 5);
  REQUIRE(added.size() == 2);
  CHECK(is_maximal(g));
  for (auto [u, v] : added) {
    int id = -1;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      if (g.edges()[i].u == u && g.edges()[i].v == v) id = static_cast<int>(i);
    }
    REQUIRE(id >= 0);
    CHECK_FALSE(g.edges()[id].w.finite());
  }
  CHECK_THROWS_AS(maximalize(BeerGraph(2, {{0, 1, Weight(1)}}, {})), GraphError);
}

TEST_CASE("enforce_gti fixes the slack triangle") {
  BeerGraph slack(3, {{0, 1, Weight(5)}, {1, 2, Weight(1)}, {0, 2, Weight(1)}}, {});
  auto [delta, parent] = enforce_gti(slack);
  // canonical edge order: (0,1), (0,2), (1,2)
  CHECK(delta[0].value() == 2.0);
  CHECK(parent[0] == 2);
  CHECK(delta[1].value() == 1.0);
  CHECK(parent[1] == -1);
}

TEST_CASE("enforce_gti is the identity on GTI graphs") {
  auto [delta, parent] = enforce_gti(fix_t3());
  for (std::size_t i = 0; i < delta.size(); ++i) {
    CHECK(delta[i].value() == 1.0);
    CHECK(parent[i] == -1);
  }
}

TEST_CASE("enforce_gti relaxes the maximalized star") {
  auto [g, added] = maximalize(star4());
  auto [delta, parent] = enforce_gti(g);
  // confirmed against a Floyd-Warshall-style oracle on the 4-vertex graph
  OracleTables t = oracle_all_pairs(star4());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    CHECK(delta[i].value() == doctest::Approx(t.d(e.u, e.v)));
  }
  // (1,2) and (2,3) relax through the hub
  NormalizedGraph norm = normalize(star4());
  CHECK(norm.gti_parent[norm.edge_id(1, 2)] == 0);
  CHECK(norm.gti_parent[norm.edge_id(2, 3)] == 0);
}

TEST_CASE("expand_edge examples") {
  NormalizedGraph t3 = normalize(fix_t3());
  PathInG p = expand_edge(t3, 0, 1);
  CHECK(p.vertices == std::vector<VertexId>{0, 1});
  CHECK(p.weight.value() == 1.0);

  BeerGraph slack(3, {{0, 1, Weight(5)}, {1, 2, Weight(1)}, {0, 2, Weight(1)}}, {});
  NormalizedGraph ns = normalize(slack);
  PathInG q = expand_edge(ns, 0, 1);
  CHECK(q.vertices == std::vector<VertexId>{0, 2, 1});
  CHECK(q.weight.value() == 2.0);

  NormalizedGraph nstar = normalize(star4());
  PathInG r = expand_edge(nstar, 1, 2);
  CHECK(r.vertices == std::vector<VertexId>{1, 0, 2});
  CHECK(r.weight.value() == 2.0);
  CHECK_THROWS_AS(expand_edge(t3, 0, 0), GraphError);
}

TEST_CASE("normalize keeps already-normal graphs intact") {
  NormalizedGraph norm = normalize(fix_h6());
  CHECK(norm.added_edges.empty());
  CHECK(norm.graph == fix_h6());
  for (VertexId p : norm.gti_parent) CHECK(p == -1);
}

TEST_CASE("normalize preserves distances and beer distances (200 random graphs)") {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 200; ++seed) {
    VertexId n = 3 + static_cast<VertexId>(seed % 30);
    BeerGraph g;
    switch (seed % 3) {
      case 0: g = gen_random_maximal(n, seed, 0.3); break;
      case 1: g = gen_random_outerplanar(n, seed, 0.5, 0.3); break;
      default: g = gen_random_tree(n, seed, 0.3); break;
    }
    ++checked;
    NormalizedGraph norm = normalize(g);
    OracleTables before = oracle_all_pairs(g);
    OracleTables after = oracle_all_pairs(norm.graph);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        REQUIRE(weights_close(before.d(u, v), after.d(u, v)));
        REQUIRE(weights_close(before.db(u, v), after.db(u, v)));
      }
    }
    // every normalized edge satisfies dist = weight
    CHECK(satisfies_gti(norm.graph, after.dist));
    // every expansion is a valid input-graph path with the edge's weight
    CsrAdjacency orig_adj(g);
    for (const Edge& e : norm.graph.edges()) {
      PathInG leg = expand_edge(norm, e.u, e.v);
      REQUIRE(leg.vertices.front() == e.u);
      REQUIRE(leg.vertices.back() == e.v);
      double sum = 0.0;
      for (std::size_t i = 1; i < leg.vertices.size(); ++i) {
        sum += orig_adj.edge_weight(leg.vertices[i - 1], leg.vertices[i]).value();
      }
      REQUIRE(sum == e.w.value());
    }
  }
}

TEST_CASE("normalize is idempotent") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    BeerGraph g = gen_random_outerplanar(20, seed, 0.4, 0.2);
    NormalizedGraph once = normalize(g);
    NormalizedGraph twice = normalize(once.graph);
    CHECK(twice.added_edges.empty());
    CHECK(twice.graph == once.graph);
  }
}

TEST_CASE("beer distances survive normalization of the beerless path") {
  NormalizedGraph norm = normalize(path3());
  OracleTables t = oracle_all_pairs(norm.graph);
  for (VertexId u = 0; u < 3; ++u) {
    for (VertexId v = 0; v < 3; ++v) {
      CHECK(std::isinf(t.db(u, v)));
    }
  }
}

}  // TEST_SUITE
