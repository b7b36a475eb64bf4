#include <doctest.h>

#include "beerquery/engine.hpp"
#include "beerquery/fixtures.hpp"
#include "beerquery/harness.hpp"
#include "beerquery/verify.hpp"

using namespace beerquery;

TEST_SUITE("sssp-beer") {

TEST_CASE("FIX-T3 from source 0") {
  QueryEngine engine{fix_t3()};
  SsspBeerResult res = engine.sssp(0);
  // dist_B(0,2) = 1 (edge to the store); matches the oracle identity.
  CHECK(res.dist_b == std::vector<double>{2.0, 2.0, 1.0});
}

TEST_CASE("FIX-H6 from source 1") {
  QueryEngine engine{fix_h6()};
  SsspBeerResult res = engine.sssp(1);
  CHECK(res.dist_b[4] == 3.0);
  CHECK(res.dist_b[1] == 4.0);
}

TEST_CASE("store at the source: beer distance equals distance") {
  QueryEngine engine{fix_f4()};
  SsspBeerResult res = engine.sssp(3);
  for (VertexId v = 0; v < 4; ++v) CHECK(res.dist_b[v] == res.dist[v]);
}

TEST_CASE("path extraction examples") {
  QueryEngine t3{fix_t3()};
  SsspBeerResult r0 = t3.sssp(0);
  PathInG p = t3.sssp_path(r0, 1);
  CHECK(p.vertices == std::vector<VertexId>{0, 2, 1});
  CHECK(p.weight.value() == 2.0);

  QueryEngine f4{fix_f4()};
  SsspBeerResult r3 = f4.sssp(3);
  PathInG q = f4.sssp_path(r3, 3);
  CHECK(q.vertices == std::vector<VertexId>{3});

  QueryEngine h6{fix_h6()};
  SsspBeerResult r1 = h6.sssp(1);
  PathInG w = h6.sssp_path(r1, 4);
  CHECK(w.weight.value() == 3.0);
  std::string why;
  CHECK_MESSAGE(check_beer_walk(fix_h6(), w, 3.0, &why), why);
}

TEST_CASE("values match the oracle for every source on the corpus") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    VertexId n = 3 + static_cast<VertexId>((seed * 17) % 198);
    BeerGraph g;
    switch (seed % 3) {
      case 0: g = gen_random_maximal(n, 6000 + seed, 0.3); break;
      case 1: g = gen_random_outerplanar(n, 6000 + seed, 0.45, 0.2); break;
      default: g = gen_random_tree(n, 6000 + seed, seed % 6 == 2 ? 0.0 : 0.3);
    }
    QueryEngine engine{g};
    for (VertexId s = 0; s < g.n(); ++s) {
      SourceDistances sd = oracle_beer_sssp(g, s);
      SsspBeerResult res = engine.sssp(s);
      for (VertexId v = 0; v < g.n(); ++v) {
        REQUIRE(weights_close(res.dist[v], sd.dist[v]));
        REQUIRE(weights_close(res.dist_b[v], sd.dist_b[v]));
        // pairwise agreement with the point-to-point oracle
        REQUIRE(res.dist_b[v] == engine.query_beer_dist(s, v).value());
      }
    }
  }
}

TEST_CASE("extracted paths are valid beer walks of matching weight") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    VertexId n = 10 + static_cast<VertexId>((seed * 23) % 80);
    BeerGraph g = seed % 2 ? gen_random_outerplanar(n, 7000 + seed, 0.5, 0.25)
                           : gen_random_maximal(n, 7000 + seed, 0.25);
    QueryEngine engine{g};
    for (VertexId s = 0; s < g.n(); s += 3) {
      SsspBeerResult res = engine.sssp(s);
      for (VertexId v = 0; v < g.n(); ++v) {
        if (std::isinf(res.dist_b[v])) continue;
        PathInG p = engine.sssp_path(res, v);
        std::string why;
        REQUIRE_MESSAGE(check_beer_walk(g, p, res.dist_b[v], &why), why);
        REQUIRE(p.vertices.front() == s);
        REQUIRE(p.vertices.back() == v);
      }
    }
  }
}

TEST_CASE("unreachable targets throw") {
  BeerGraph g(3, {{0, 1, Weight(1)}, {1, 2, Weight(1)}, {0, 2, Weight(1)}}, {});
  QueryEngine engine{g};
  SsspBeerResult res = engine.sssp(0);
  CHECK(std::isinf(res.dist_b[1]));
  CHECK_THROWS_AS(engine.sssp_path(res, 1), GraphError);
}

}  // TEST_SUITE
