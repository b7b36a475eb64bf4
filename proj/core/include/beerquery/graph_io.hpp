#pragma once

#include <string>

#include "beerquery/graph.hpp"

namespace beerquery {

// Graph file format: one UTF-8 JSON object
//   {"n": 4, "edges": [[0,1,1.0],...], "beer": [3]}
// Unknown keys are rejected; weights must be finite positive decimals.
BeerGraph parse_graph_json(const std::string& text);
BeerGraph load_graph_file(const std::string& path);

// Canonical serialization: fixed key order, shortest round-trip decimals.
// Deterministic byte-for-byte for equal graphs.
std::string graph_to_json(const BeerGraph& g);

// Shortest round-trip decimal form of a double ("inf" for +infinity).
std::string format_decimal(double v);

}  // namespace beerquery
