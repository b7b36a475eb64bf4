#include "beerquery/verify.hpp"

#include <sstream>

#include "beerquery/engine.hpp"
#include "beerquery/fixtures.hpp"
#include "beerquery/graph_io.hpp"
#include "beerquery/harness.hpp"

namespace beerquery {

bool check_beer_walk(const BeerGraph& g, const PathInG& walk,
                     double expected_weight, std::string* why) {
  auto complain = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (walk.vertices.empty()) return complain("empty walk");
  CsrAdjacency adj(g);
  double sum = 0.0;
  bool store = false;
  for (std::size_t i = 0; i < walk.vertices.size(); ++i) {
    VertexId v = walk.vertices[i];
    if (v < 0 || v >= g.n()) return complain("vertex out of range");
    if (g.is_beer(v)) store = true;
    if (i == 0) continue;
    VertexId u = walk.vertices[i - 1];
    int s = adj.slot(u, v);
    if (s < 0) {
      return complain("walk step (" + std::to_string(u) + "," +
                      std::to_string(v) + ") is not an edge");
    }
    sum += adj.weights(u)[s].value();
  }
  if (!store) return complain("walk visits no beer store");
  if (sum != expected_weight) {
    return complain("walk weight " + format_decimal(sum) + " != expected " +
                    format_decimal(expected_weight));
  }
  return true;
}

namespace {

bool verify_graph(const BeerGraph& g, const std::string& label,
                  std::ostringstream& out) {
  OracleTables oracle = oracle_all_pairs(g);
  QueryEngine engine{g};
  const VertexId n = g.n();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      double ed = engine.query_dist(u, v).value();
      double eb = engine.query_beer_dist(u, v).value();
      if (!weights_close(ed, oracle.d(u, v))) {
        out << label << " MISMATCH dist(" << u << "," << v << ") engine "
            << format_decimal(ed) << " oracle " << format_decimal(oracle.d(u, v))
            << "\n";
        return false;
      }
      if (!weights_close(eb, oracle.db(u, v))) {
        out << label << " MISMATCH beer-dist(" << u << "," << v << ") engine "
            << format_decimal(eb) << " oracle "
            << format_decimal(oracle.db(u, v)) << "\n";
        return false;
      }
      if (eb == std::numeric_limits<double>::infinity()) continue;
      PathInG walk = engine.query_beer_path(u, v);
      std::string why;
      if (!check_beer_walk(g, walk, eb, &why)) {
        out << label << " BAD WALK (" << u << "," << v << "): " << why << "\n";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

VerifyOutcome verify_run(VertexId n_max, int trials, std::uint64_t seed) {
  VerifyOutcome outcome;
  std::ostringstream out;
  if (n_max < 3) n_max = 3;

  for (const std::string& name : fixture_names()) {
    BeerGraph g = parse_graph_json(emit_fixture(name));
    bool ok = verify_graph(g, "fixture " + name, out);
    out << "fixture " << name << " n=" << g.n() << (ok ? " ok" : " FAILED")
        << "\n";
    if (!ok) outcome.ok = false;
  }

  std::mt19937_64 pick(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int t = 0; t < trials; ++t) {
    VertexId n = 3 + static_cast<VertexId>(pick() % (n_max - 2));
    std::uint64_t sub_seed = seed + 1000003ULL * static_cast<std::uint64_t>(t);
    double beer_frac = (t % 5 == 4) ? 0.0 : 0.25;
    const char* mode;
    BeerGraph g;
    switch (t % 3) {
      case 0:
        mode = "maximal";
        g = gen_random_maximal(n, sub_seed, beer_frac);
        break;
      case 1:
        mode = "chords";
        g = gen_random_outerplanar(n, sub_seed, 0.45, beer_frac);
        break;
      default:
        mode = "tree";
        g = gen_random_tree(n, sub_seed, beer_frac);
        break;
    }
    bool ok = verify_graph(g, "trial " + std::to_string(t), out);
    out << "trial " << t << " mode=" << mode << " n=" << g.n()
        << " beer=" << g.beer().size() << (ok ? " ok" : " FAILED") << "\n";
    if (!ok) outcome.ok = false;
  }
  out << (outcome.ok ? "verify: all checks passed" : "verify: FAILURES above")
      << "\n";
  outcome.report = out.str();
  return outcome;
}

}  // namespace beerquery
