#pragma once

#include <string>
#include <vector>

#include "beerquery/graph.hpp"

namespace beerquery {

// Named reference graphs used throughout the test suites and docs.
//   FIX-T3:   unit triangle, store at 2.
//   FIX-F4:   unit square with chord (0,2), store at 3.
//   FIX-H6:   unit hexagon fanned from 0, store at 5.
//   FIX-8FAN: two glued fans on 8 vertices, store at 6.
BeerGraph fix_t3();
BeerGraph fix_f4();
BeerGraph fix_h6();
BeerGraph fix_8fan();

std::vector<std::string> fixture_names();

// Byte-exact graph file for a named fixture; throws GraphError for unknown
// names.
std::string emit_fixture(const std::string& name);

}  // namespace beerquery
