#include "beerquery/fixtures.hpp"

#include "beerquery/graph_io.hpp"

namespace beerquery {

namespace {
Edge unit(VertexId u, VertexId v) { return {u, v, Weight(1.0)}; }
}  // namespace

BeerGraph fix_t3() {
  return BeerGraph(3, {unit(0, 1), unit(1, 2), unit(0, 2)}, {2});
}

BeerGraph fix_f4() {
  return BeerGraph(
      4, {unit(0, 1), unit(1, 2), unit(2, 3), unit(0, 3), unit(0, 2)}, {3});
}

BeerGraph fix_h6() {
  return BeerGraph(6,
                   {unit(0, 1), unit(1, 2), unit(2, 3), unit(3, 4), unit(4, 5),
                    unit(0, 5), unit(0, 2), unit(0, 3), unit(0, 4)},
                   {5});
}

BeerGraph fix_8fan() {
  return BeerGraph(8,
                   {unit(0, 1), unit(1, 2), unit(2, 3), unit(3, 4), unit(4, 5),
                    unit(5, 6), unit(6, 7), unit(0, 7), unit(0, 2), unit(2, 4),
                    unit(2, 7), unit(4, 6), unit(4, 7)},
                   {6});
}

std::vector<std::string> fixture_names() {
  return {"FIX-T3", "FIX-F4", "FIX-H6", "FIX-8FAN"};
}

std::string emit_fixture(const std::string& name) {
  if (name == "FIX-T3") return graph_to_json(fix_t3());
  if (name == "FIX-F4") return graph_to_json(fix_f4());
  if (name == "FIX-H6") return graph_to_json(fix_h6());
  if (name == "FIX-8FAN") return graph_to_json(fix_8fan());
  throw GraphError("unknown fixture: " + name);
}

}  // namespace beerquery
