#include <doctest.h>

#include "beerquery/beer_base.hpp"
#include "beerquery/fixtures.hpp"
#include "beerquery/harness.hpp"
#include "beerquery/verify.hpp"

using namespace beerquery;

namespace {

struct Ctx {
  NormalizedGraph norm;
  DualTree dual;
  BeerBaseTables tables;
  explicit Ctx(const BeerGraph& g, std::optional<NodeId> root = std::nullopt)
      : norm(normalize(g)), dual(norm, root), tables(build_beer_base(dual)) {}

  double edge_db(VertexId u, VertexId v) const {
    return tables.edge_beer_dist_by_id(norm.edge_id(u, v));
  }
};

}  // namespace

TEST_SUITE("beer-base") {

TEST_CASE("FIX-T3 base values") {
  Ctx c(fix_t3());
  CHECK(c.tables.vertex_beer_dist(2) == 0.0);
  CHECK(c.tables.vertex_beer_dist(0) == 2.0);
  CHECK(c.edge_db(0, 1) == 2.0);
  CHECK(c.edge_db(0, 2) == 1.0);
}

TEST_CASE("FIX-T3 with no stores: everything infinite") {
  BeerGraph g(3, {{0, 1, Weight(1)}, {1, 2, Weight(1)}, {0, 2, Weight(1)}}, {});
  Ctx c(g);
  for (VertexId v = 0; v < 3; ++v) {
    CHECK(std::isinf(c.tables.vertex_beer_dist(v)));
  }
  CHECK(std::isinf(c.edge_db(0, 1)));
  CHECK_THROWS_AS(beer_edge_path(c.dual, c.tables, 0, 1), GraphError);
}

TEST_CASE("FIX-F4 base values match the oracle walk enumeration") {
  Ctx c(fix_f4());
  CHECK(c.tables.vertex_beer_dist(1) == 4.0);
  CHECK(c.tables.vertex_beer_dist(2) == 2.0);
  CHECK(c.edge_db(0, 1) == 3.0);
  CHECK(c.edge_db(1, 2) == 3.0);
}

TEST_CASE("reconstruction on FIX-T3") {
  Ctx c(fix_t3());
  PathInG p = beer_edge_path(c.dual, c.tables, 0, 1);
  CHECK(p.vertices == std::vector<VertexId>{0, 2, 1});
  CHECK(p.weight.value() == 2.0);
  PathInG store = beer_edge_path(c.dual, c.tables, 2, 2);
  CHECK(store.vertices == std::vector<VertexId>{2});
  CHECK(store.weight.value() == 0.0);
}

TEST_CASE("reconstruction on FIX-F4 self loop") {
  Ctx c(fix_f4());
  PathInG p = beer_edge_path(c.dual, c.tables, 1, 1);
  CHECK(p.weight.value() == 4.0);
  std::string why;
  CHECK_MESSAGE(check_beer_walk(fix_f4(), p, 4.0, &why), why);
  CHECK(p.vertices.front() == 1);
  CHECK(p.vertices.back() == 1);
}

TEST_CASE("edge and vertex values match the oracle on 100 random graphs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    VertexId n = 3 + static_cast<VertexId>((seed * 13) % 198);
    BeerGraph g = gen_random_maximal(n, 500 + seed, seed % 4 == 0 ? 0.05 : 0.3);
    Ctx c(g);
    OracleTables t = oracle_all_pairs(c.norm.graph);
    for (VertexId v = 0; v < n; ++v) {
      REQUIRE(weights_close(c.tables.vertex_beer_dist(v), t.db(v, v)));
    }
    for (std::size_t e = 0; e < c.norm.graph.edges().size(); ++e) {
      const Edge& ed = c.norm.graph.edges()[e];
      REQUIRE(weights_close(c.tables.edge_beer_dist_by_id(static_cast<int>(e)),
                            t.db(ed.u, ed.v)));
    }
  }
}

TEST_CASE("reconstructed paths are valid beer walks of the stored weight") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    BeerGraph g = gen_random_maximal(30 + static_cast<VertexId>(seed), seed, 0.25);
    Ctx c(g);
    for (VertexId v = 0; v < g.n(); ++v) {
      double want = c.tables.vertex_beer_dist(v);
      if (std::isinf(want)) continue;
      PathInG p = beer_edge_path(c.dual, c.tables, v, v);
      std::string why;
      REQUIRE_MESSAGE(check_beer_walk(g, p, want, &why), why);
    }
    for (const Edge& e : c.norm.graph.edges()) {
      double want = c.edge_db(e.u, e.v);
      if (std::isinf(want)) continue;
      PathInG p = beer_edge_path(c.dual, c.tables, e.u, e.v);
      std::string why;
      REQUIRE_MESSAGE(check_beer_walk(g, p, want, &why), why);
      REQUIRE(p.vertices.front() == e.u);
      REQUIRE(p.vertices.back() == e.v);
      // reversed orientation walks backwards
      PathInG q = beer_edge_path(c.dual, c.tables, e.v, e.u);
      REQUIRE(q.vertices.front() == e.v);
      REQUIRE(q.vertices.back() == e.u);
      REQUIRE(q.weight.value() == want);
    }
  }
}

TEST_CASE("values and reconstructed walks are root independent") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    VertexId n = 4 + static_cast<VertexId>(seed * 3 % 26);
    BeerGraph g = gen_random_maximal(n, 900 + seed, 0.3);
    Ctx base(g, std::nullopt);
    for (NodeId root = 0; root < base.dual.face_count(); ++root) {
      Ctx other(g, root);
      for (VertexId v = 0; v < n; ++v) {
        REQUIRE(base.tables.vertex_beer_dist(v) ==
                other.tables.vertex_beer_dist(v));
      }
      for (std::size_t e = 0; e < base.norm.graph.edges().size(); ++e) {
        REQUIRE(base.tables.edge_beer_dist_by_id(static_cast<int>(e)) ==
                other.tables.edge_beer_dist_by_id(static_cast<int>(e)));
      }
      // reported walks identical, not just equal in weight
      for (const Edge& e : base.norm.graph.edges()) {
        if (std::isinf(base.edge_db(e.u, e.v))) continue;
        CHECK(beer_edge_path(base.dual, base.tables, e.u, e.v).vertices ==
              beer_edge_path(other.dual, other.tables, e.u, e.v).vertices);
      }
    }
  }
}

TEST_CASE("edge beer distance is symmetric and dominates the edge weight") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    BeerGraph g = gen_random_maximal(40, 300 + seed, 0.3);
    Ctx c(g);
    for (const Edge& e : c.norm.graph.edges()) {
      double db = c.edge_db(e.u, e.v);
      CHECK(db >= e.w.value());
      CHECK(c.edge_db(e.v, e.u) == db);
    }
  }
}

}  // TEST_SUITE
