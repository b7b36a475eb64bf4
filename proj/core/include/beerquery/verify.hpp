#pragma once

#include <cstdint>
#include <string>

#include "beerquery/graph.hpp"

namespace beerquery {

struct VerifyOutcome {
  bool ok = true;
  std::string report;  // deterministic, line oriented, no timings
};

// Checks every engine answer (all-pairs dist, beer dist, and reported beer
// walks) against the modified-Dijkstra oracle, on the named fixtures and on
// `trials` random instances with n in [3, n_max]. Instance shapes cycle
// through maximal, chord-thinned, and tree modes.
VerifyOutcome verify_run(VertexId n_max, int trials, std::uint64_t seed);

// Validity check shared by tests: the walk uses only edges of g, visits a
// store, and its edge-weight sum matches `expected_weight` bitwise.
bool check_beer_walk(const BeerGraph& g, const PathInG& walk,
                     double expected_weight, std::string* why = nullptr);

}  // namespace beerquery
