#include <chrono>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "beerquery/engine.hpp"
#include "beerquery/fixtures.hpp"
#include "beerquery/graph_io.hpp"
#include "beerquery/harness.hpp"
#include "beerquery/verify.hpp"

namespace bq = beerquery;

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

int run_gen(bq::VertexId n, std::uint64_t seed, double beer_frac,
            double chords, bool tree_mode) {
  bq::BeerGraph g;
  if (tree_mode) {
    g = bq::gen_random_tree(n, seed, beer_frac);
  } else if (chords >= 0.0) {
    g = bq::gen_random_outerplanar(n, seed, chords, beer_frac);
  } else {
    g = bq::gen_random_maximal(n, seed, beer_frac);
  }
  std::cout << bq::graph_to_json(g);
  return 0;
}

int run_normalize(const std::string& path) {
  bq::BeerGraph g = bq::load_graph_file(path);
  bq::NormalizedGraph norm = bq::normalize(g);
  std::cout << "[";
  for (std::size_t i = 0; i < norm.added_edges.size(); ++i) {
    const bq::Edge& e = norm.graph.edges()[norm.added_edges[i]];
    if (i) std::cout << ",";
    std::cout << "[" << e.u << "," << e.v << "]";
  }
  std::cout << "]\n";
  return 0;
}

int run_dual(const std::string& path) {
  bq::BeerGraph g = bq::load_graph_file(path);
  bq::NormalizedGraph norm = bq::normalize(g);
  bq::DualTree dual = bq::build_dual(norm);
  std::cout << "{\"faces\": [";
  for (bq::NodeId f = 0; f < dual.face_count(); ++f) {
    if (f) std::cout << ",";
    const auto& t = dual.face(f).v;
    std::cout << "[" << t[0] << "," << t[1] << "," << t[2] << "]";
  }
  std::cout << "], \"dual_edges\": [";
  bool first = true;
  for (bq::NodeId f = 0; f < dual.face_count(); ++f) {
    bq::NodeId p = dual.tree().parent(f);
    if (p < 0) continue;
    auto [u, v] = dual.shared_edge(f, p);
    if (u > v) std::swap(u, v);
    if (!first) std::cout << ",";
    first = false;
    std::cout << "[" << std::min(f, p) << "," << std::max(f, p) << ",[" << u
              << "," << v << "]]";
  }
  std::cout << "]}\n";
  return 0;
}

int run_query(const std::string& path, bq::VertexId from, bq::VertexId to,
              const std::string& mode) {
  bq::BeerGraph g = bq::load_graph_file(path);
  bq::QueryEngine engine{g};
  if (mode == "dist") {
    std::cout << bq::format_decimal(engine.query_dist(from, to).value()) << "\n";
  } else if (mode == "beer-dist") {
    std::cout << bq::format_decimal(engine.query_beer_dist(from, to).value())
              << "\n";
  } else if (mode == "beer-path") {
    bq::PathInG walk = engine.query_beer_path(from, to);
    for (std::size_t i = 0; i < walk.vertices.size(); ++i) {
      if (i) std::cout << " ";
      std::cout << walk.vertices[i];
    }
    std::cout << "\nweight=" << bq::format_decimal(walk.weight.value()) << "\n";
  } else {
    std::cerr << "unknown mode: " << mode << "\n";
    return 1;
  }
  return 0;
}

int run_sssp(const std::string& path, bq::VertexId source) {
  bq::BeerGraph g = bq::load_graph_file(path);
  bq::QueryEngine engine{g};
  bq::SsspBeerResult res = engine.sssp(source);
  for (bq::VertexId v = 0; v < g.n(); ++v) {
    std::cout << v << " " << bq::format_decimal(res.dist[v]) << " "
              << bq::format_decimal(res.dist_b[v]) << "\n";
  }
  return 0;
}

int run_verify(bq::VertexId n, int trials, std::uint64_t seed) {
  bq::VerifyOutcome outcome = bq::verify_run(n, trials, seed);
  std::cout << outcome.report;
  return outcome.ok ? 0 : 1;
}

int run_bench(const std::string& sizes_csv, int queries, std::uint64_t seed) {
  std::vector<bq::VertexId> sizes;
  std::stringstream ss(sizes_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    sizes.push_back(static_cast<bq::VertexId>(std::stod(item)));
  }
  std::cout << "n build_s dist_query_us beer_dist_query_us beer_path_us_per_vertex\n";
  for (bq::VertexId n : sizes) {
    double t0 = now_seconds();
    bq::BeerGraph g = bq::gen_random_maximal(n, seed, 0.2);
    bq::QueryEngine engine{g};
    double build = now_seconds() - t0;

    std::mt19937_64 rng(seed + 1);
    std::uniform_int_distribution<bq::VertexId> pick(0, n - 1);
    volatile double sink = 0.0;
    double t1 = now_seconds();
    for (int q = 0; q < queries; ++q) {
      sink = sink + engine.query_dist(pick(rng), pick(rng)).value();
    }
    double dist_us = (now_seconds() - t1) * 1e6 / queries;
    double t2 = now_seconds();
    for (int q = 0; q < queries; ++q) {
      sink = sink + engine.query_beer_dist(pick(rng), pick(rng)).value();
    }
    double beer_us = (now_seconds() - t2) * 1e6 / queries;

    int reports = std::min(queries, 200);
    std::size_t verts = 0;
    double t3 = now_seconds();
    for (int q = 0; q < reports; ++q) {
      bq::PathInG walk = engine.query_beer_path(pick(rng), pick(rng));
      verts += walk.vertices.size();
    }
    double path_us = (now_seconds() - t3) * 1e6 / std::max<std::size_t>(verts, 1);

    std::cout << n << " " << build << " " << dist_us << " " << beer_us << " "
              << path_us << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Outerplanar beer-graph query engine"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a random instance (JSON to stdout)");
  bq::VertexId gen_n = 10;
  std::uint64_t gen_seed = 1;
  double gen_beer = 0.25;
  double gen_chords = -1.0;
  bool gen_tree = false;
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--seed", gen_seed, "generator seed")->required();
  gen->add_option("--beer-frac", gen_beer, "fraction of beer stores");
  auto* chords_opt =
      gen->add_option("--chords", gen_chords, "chord keep probability in [0,1]");
  auto* tree_opt = gen->add_flag("--tree", gen_tree, "generate a random tree");
  chords_opt->excludes(tree_opt);

  auto* norm = app.add_subcommand("normalize", "Report edges added by normalization");
  std::string norm_path;
  norm->add_option("--graph", norm_path, "graph file")->required();

  auto* dual = app.add_subcommand("dual", "Print faces and dual edges");
  std::string dual_path;
  dual->add_option("--graph", dual_path, "graph file")->required();

  auto* query = app.add_subcommand("query", "Distance / beer-distance / beer-path");
  std::string query_path, query_mode = "dist";
  bq::VertexId query_from = 0, query_to = 0;
  query->add_option("--graph", query_path, "graph file")->required();
  query->add_option("--from", query_from, "source vertex")->required();
  query->add_option("--to", query_to, "target vertex")->required();
  query->add_option("--mode", query_mode, "dist | beer-dist | beer-path");

  auto* sssp = app.add_subcommand("sssp", "Single-source distances and beer distances");
  std::string sssp_path;
  bq::VertexId sssp_source = 0;
  sssp->add_option("--graph", sssp_path, "graph file")->required();
  sssp->add_option("--source", sssp_source, "source vertex")->required();

  auto* verify = app.add_subcommand("verify", "Check engine answers against the oracle");
  bq::VertexId verify_n = 60;
  int verify_trials = 25;
  std::uint64_t verify_seed = 1;
  verify->add_option("--n", verify_n, "max vertex count");
  verify->add_option("--trials", verify_trials, "number of random instances");
  verify->add_option("--seed", verify_seed, "seed");

  auto* bench = app.add_subcommand("bench", "Build and query timings");
  std::string bench_sizes = "1e4,1e5";
  int bench_queries = 10000;
  std::uint64_t bench_seed = 1;
  bench->add_option("--sizes", bench_sizes, "comma-separated sizes");
  bench->add_option("--queries", bench_queries, "queries per size");
  bench->add_option("--seed", bench_seed, "seed");

  auto* fixtures = app.add_subcommand("fixtures", "Emit a named fixture graph");
  std::string fixture_name;
  fixtures->add_option("--emit", fixture_name, "fixture name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return run_gen(gen_n, gen_seed, gen_beer, gen_chords, gen_tree);
    }
    if (norm->parsed()) return run_normalize(norm_path);
    if (dual->parsed()) return run_dual(dual_path);
    if (query->parsed()) {
      return run_query(query_path, query_from, query_to, query_mode);
    }
    if (sssp->parsed()) return run_sssp(sssp_path, sssp_source);
    if (verify->parsed()) return run_verify(verify_n, verify_trials, verify_seed);
    if (bench->parsed()) return run_bench(bench_sizes, bench_queries, bench_seed);
    if (fixtures->parsed()) {
      std::cout << bq::emit_fixture(fixture_name);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
