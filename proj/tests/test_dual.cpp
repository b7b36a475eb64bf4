#include <doctest.h>

#include "beerquery/beer_base.hpp"
#include "beerquery/fixtures.hpp"
#include "beerquery/harness.hpp"

using namespace beerquery;

namespace {

NodeId face_index(const DualTree& dual, std::array<VertexId, 3> tri) {
  for (NodeId f = 0; f < dual.face_count(); ++f) {
    if (dual.face(f).v == tri) return f;
  }
  return -1;
}

}  // namespace

TEST_SUITE("dual") {

TEST_CASE("FIX-T3: a single face") {
  NormalizedGraph norm = normalize(fix_t3());
  DualTree dual = build_dual(norm);
  REQUIRE(dual.face_count() == 1);
  CHECK(dual.face(0).v == std::array<VertexId, 3>{0, 1, 2});
}

TEST_CASE("FIX-F4: two faces sharing chord (0,2)") {
  NormalizedGraph norm = normalize(fix_f4());
  DualTree dual = build_dual(norm);
  REQUIRE(dual.face_count() == 2);
  CHECK(face_index(dual, {0, 1, 2}) >= 0);
  CHECK(face_index(dual, {0, 2, 3}) >= 0);
  auto [u, v] = dual.shared_edge(0, 1);
  if (u > v) std::swap(u, v);
  CHECK(u == 0);
  CHECK(v == 2);
}

TEST_CASE("FIX-H6: four faces on a path, P_0 spans all of them") {
  NormalizedGraph norm = normalize(fix_h6());
  DualTree dual = build_dual(norm);
  REQUIRE(dual.face_count() == 4);
  // P_0 spans all four faces
  NodeId e1 = dual.path_end1(0), e2 = dual.path_end2(0);
  CHECK(dual.index().path_length(e1, e2) == 3);
  // P_2 spans exactly the two faces containing vertex 2
  NodeId f012 = face_index(dual, {0, 1, 2});
  NodeId f023 = face_index(dual, {0, 2, 3});
  CHECK(((dual.path_end1(2) == f012 && dual.path_end2(2) == f023) ||
         (dual.path_end1(2) == f023 && dual.path_end2(2) == f012)));
  // the colour-path case from the toolkit contract, on the real dual
  NodeId f045 = face_index(dual, {0, 4, 5});
  CHECK(dual.index().level(f045) == 3);
  CHECK(dual.index().on_path(f012, f045, f023));
  CHECK(dual.colours().closest_colour(dual.index(), f012, f045, 2) == f023);
}

TEST_CASE("face_of is a deterministic endpoint of P_v") {
  NormalizedGraph norm = normalize(fix_h6());
  DualTree dual = build_dual(norm);
  CHECK(dual.face_of(0) == face_index(dual, {0, 1, 2}));
  CHECK(dual.face_of(5) == face_index(dual, {0, 4, 5}));
  NormalizedGraph t3 = normalize(fix_t3());
  DualTree d3 = build_dual(t3);
  CHECK(d3.face_of(1) == 0);
}

TEST_CASE("dual structural invariants on random instances") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    VertexId n = 5 + static_cast<VertexId>(seed * 9 % 60);
    BeerGraph g = gen_random_maximal(n, seed, 0.2);
    NormalizedGraph norm = normalize(g);
    DualTree dual = build_dual(norm);
    CHECK(dual.face_count() == n - 2);
    // degree <= 3 in the dual
    std::vector<int> deg(dual.face_count(), 0);
    for (NodeId f = 0; f < dual.face_count(); ++f) {
      if (dual.tree().parent(f) >= 0) {
        ++deg[f];
        ++deg[dual.tree().parent(f)];
      }
    }
    for (int d : deg) CHECK(d <= 3);
    // P_v is exactly the set of faces containing v
    for (VertexId v = 0; v < n; ++v) {
      NodeId a = dual.path_end1(v), b = dual.path_end2(v);
      for (NodeId f = 0; f < dual.face_count(); ++f) {
        CHECK(dual.face(f).contains(v) == dual.index().on_path(a, b, f));
      }
    }
  }
}

TEST_CASE("chains on FIX-H6 and FIX-T3") {
  NormalizedGraph norm = normalize(fix_h6());
  DualTree dual = build_dual(norm);
  BeerBaseTables tables = build_beer_base(dual);
  ChainSet chains(dual, tables);

  REQUIRE(chains.length(0) == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(chains.chain_vertex(0, i) == i + 1);  // rho_0 = (1,2,3,4,5)
    CHECK(chains.prefix(0, i) == static_cast<double>(i));
  }
  REQUIRE(chains.length(2) == 3);
  CHECK(chains.chain_vertex(2, 0) == 1);  // rho_2 = (1,0,3)
  CHECK(chains.chain_vertex(2, 1) == 0);
  CHECK(chains.chain_vertex(2, 2) == 3);

  NormalizedGraph t3 = normalize(fix_t3());
  DualTree d3 = build_dual(t3);
  BeerBaseTables tb3 = build_beer_base(d3);
  ChainSet c3(d3, tb3);
  REQUIRE(c3.length(0) == 2);
  CHECK(c3.chain_vertex(0, 0) == 1);
  CHECK(c3.chain_vertex(0, 1) == 2);
  CHECK(c3.prefix(0, 1) == 1.0);
}

TEST_CASE("chain_dist on FIX-H6") {
  NormalizedGraph norm = normalize(fix_h6());
  DualTree dual = build_dual(norm);
  BeerBaseTables tables = build_beer_base(dual);
  ChainSet chains(dual, tables);
  CHECK(chains.chain_dist(0, 1, 5).value() == 4.0);
  CHECK(chains.chain_dist(0, 3, 3).value() == 0.0);
  CHECK(chains.chain_dist(0, 3, 5).value() == 2.0);
  CHECK_THROWS_AS(chains.chain_dist(0, 0, 3), GraphError);
}

TEST_CASE("chain edges exist and chain lengths sum to 2E") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    BeerGraph g = gen_random_maximal(40, 77 + seed, 0.25);
    NormalizedGraph norm = normalize(g);
    DualTree dual = build_dual(norm);
    BeerBaseTables tables = build_beer_base(dual);
    ChainSet chains(dual, tables);
    std::size_t total = 0;
    for (VertexId v = 0; v < g.n(); ++v) {
      total += chains.length(v);
      for (int i = 0; i < chains.length(v); ++i) {
        CHECK(norm.edge_id(v, chains.chain_vertex(v, i)) >= 0);
        if (i) {
          CHECK(norm.edge_id(chains.chain_vertex(v, i - 1),
                             chains.chain_vertex(v, i)) >= 0);
        }
      }
    }
    CHECK(total == 2 * g.edges().size());
  }
}

TEST_CASE("rebuilding with a different root keeps faces and changes only the tree") {
  BeerGraph g = gen_random_maximal(24, 5, 0.3);
  NormalizedGraph norm = normalize(g);
  DualTree a = build_dual(norm);
  DualTree b = build_dual(norm, a.face_count() - 1);
  REQUIRE(a.face_count() == b.face_count());
  for (NodeId f = 0; f < a.face_count(); ++f) CHECK(a.face(f).v == b.face(f).v);
  CHECK(b.tree().root() == a.face_count() - 1);
}

}  // TEST_SUITE
