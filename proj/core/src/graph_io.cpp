#include "beerquery/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace beerquery {

BeerGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("graph file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw GraphError("graph file must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "n" && it.key() != "edges" && it.key() != "beer") {
      throw GraphError("unknown key \"" + it.key() + "\" in graph file");
    }
  }
  if (!j.contains("n") || !j.contains("edges") || !j.contains("beer")) {
    throw GraphError("graph file requires keys n, edges, beer");
  }
  if (!j["n"].is_number_integer()) throw GraphError("n must be an integer");
  VertexId n = j["n"].get<VertexId>();

  std::vector<Edge> edges;
  for (const auto& item : j["edges"]) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
        !item[1].is_number_integer() || !item[2].is_number()) {
      throw GraphError("each edge must be [u, v, weight]");
    }
    VertexId u = item[0].get<VertexId>();
    VertexId v = item[1].get<VertexId>();
    double w = item[2].get<double>();
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError("edge endpoint out of range");
    }
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw GraphError("edge weight must be a finite positive decimal");
    }
    edges.push_back({u, v, Weight(w)});
  }
  std::vector<VertexId> beer;
  for (const auto& item : j["beer"]) {
    if (!item.is_number_integer()) throw GraphError("beer entries must be integers");
    beer.push_back(item.get<VertexId>());
  }
  return BeerGraph(n, std::move(edges), std::move(beer));
}

BeerGraph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_json(buf.str());
}

std::string format_decimal(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string graph_to_json(const BeerGraph& g) {
  std::string out;
  out += "{\"n\": ";
  out += std::to_string(g.n());
  out += ", \"edges\": [";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out += ",";
    first = false;
    out += "[" + std::to_string(e.u) + "," + std::to_string(e.v) + "," +
           format_decimal(e.w.value()) + "]";
  }
  out += "], \"beer\": [";
  first = true;
  for (VertexId b : g.beer()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(b);
  }
  out += "]}\n";
  return out;
}

}  // namespace beerquery
