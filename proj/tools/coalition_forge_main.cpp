// coalition-forge: parse satellite element sets, build weighted graphs, run
// coalition structure generation, and drive the benchmark studies.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cforge/bench.hpp"
#include "cforge/errors.hpp"
#include "cforge/gcsq.hpp"
#include "cforge/json_io.hpp"
#include "cforge/netgraph.hpp"
#include "cforge/tle.hpp"

namespace {

using cforge::Json;

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
  } else {
    cforge::write_text_file(out_path, payload);
  }
}

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string out = "-";
  std::string format = "json";
};

int run_parse(const std::string& tle_path, const std::string& at,
              bool allow_stale, const GlobalOptions& global) {
  const cforge::ParseResult parsed = cforge::parse_3le(cforge::read_text_file(tle_path));
  for (const auto& warning : parsed.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  if (parsed.records.empty()) {
    throw std::runtime_error("no usable records in " + tle_path);
  }
  const cforge::UtcMicros when = cforge::parse_rfc3339(at);
  std::vector<cforge::StateVector> states;
  states.reserve(parsed.records.size());
  for (const auto& rec : parsed.records) {
    states.push_back(cforge::propagate(rec, when, allow_stale));
  }
  emit(cforge::dump_json(cforge::positions_to_json(parsed.records, states)),
       global.out);
  return 0;
}

int run_graph(const std::string& positions_path, double radius_km, double noise,
              bool synthetic, int n, double sparsity, const GlobalOptions& global) {
  cforge::WeightedGraph graph;
  if (synthetic) {
    graph = cforge::generate_synthetic_graph(n, sparsity, global.seed);
  } else {
    const cforge::PositionsFile positions =
        cforge::positions_from_json(cforge::load_json_file(positions_path));
    cforge::WeightModel model;
    model.mode = cforge::WeightMode::kStarlink;
    model.noise_amplitude = noise;
    model.seed = global.seed;
    graph = cforge::build_geometric_graph(positions.states, radius_km, model);
  }
  emit(cforge::dump_json(cforge::graph_to_json(graph)), global.out);
  return 0;
}

int run_solve(const std::string& graph_path, std::optional<int> kmax,
              const std::string& sampler, const std::string& selection,
              int reads, int sweeps, const GlobalOptions& global) {
  const cforge::WeightedGraph graph =
      cforge::graph_from_json(cforge::load_json_file(graph_path));
  cforge::GcsqOptions opts;
  opts.kmax = kmax;
  opts.sampler = cforge::bench::solver_from_name(sampler);
  if (selection == "lowest") {
    opts.selection = cforge::Selection::kLowestEnergy;
  } else if (selection == "frequent") {
    opts.selection = cforge::Selection::kMostFrequent;
  } else {
    throw CLI::ValidationError("--selection must be lowest or frequent");
  }
  opts.anneal.num_reads = reads;
  opts.anneal.sweeps_per_read = sweeps;
  opts.anneal.seed = global.seed;
  const cforge::GcsqResult result = cforge::run_gcsq(graph, opts);
  emit(cforge::dump_json(cforge::result_to_json(result)), global.out);
  return 0;
}

int run_bench(const std::string& config_path, const GlobalOptions& global) {
  cforge::bench::ExperimentConfig cfg =
      cforge::bench::config_from_json(cforge::load_json_file(config_path));
  using cforge::bench::Study;
  if (cfg.study == Study::kStarlink) {
    const cforge::bench::StarlinkReport report = cforge::bench::run_starlink(cfg);
    for (const auto& warning : report.warnings) {
      std::cerr << "warning: " << warning << "\n";
    }
    const auto paths = cforge::bench::write_reports(report.records, cfg);
    for (const auto& path : paths) std::cerr << "wrote " << path << "\n";
    emit(cforge::dump_json(cforge::bench::starlink_report_to_json(report, cfg)),
         global.out);
    return 0;
  }
  const auto records = cfg.study == Study::kSparsitySweep
                           ? cforge::bench::run_sparsity_sweep(cfg)
                           : cforge::bench::run_split_quality(cfg);
  const auto paths = cforge::bench::write_reports(records, cfg);
  for (const auto& path : paths) std::cerr << "wrote " << path << "\n";
  emit(cforge::dump_json(cforge::bench::records_to_json(records, cfg)), global.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coalition-forge: coalition structure generation on satellite "
               "communication graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // global --seed/--out/--format may follow the verb

  GlobalOptions global;
  app.add_option("--seed", global.seed, "Seed for randomized steps")
      ->capture_default_str();
  app.add_option("--out", global.out, "Output path ('-' for stdout)")
      ->capture_default_str();
  app.add_option("--format", global.format, "Primary output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  auto* parse_cmd = app.add_subcommand(
      "parse", "Propagate a 3LE file to a timestamp and emit positions JSON");
  std::string tle_path;
  std::string at;
  bool allow_stale = false;
  parse_cmd->add_option("--tle", tle_path, "3LE input file")->required();
  parse_cmd->add_option("--at", at, "RFC3339 timestamp, e.g. 2025-06-01T00:00:00Z")
      ->required();
  parse_cmd->add_flag("--allow-stale", allow_stale,
                      "Permit propagation beyond 7 days from epoch");

  auto* graph_cmd = app.add_subcommand(
      "graph", "Build a weighted graph from positions JSON or synthetically");
  std::string positions_path;
  double radius_km = 0.0;
  double noise = 1.5;
  bool synthetic = false;
  int n = 0;
  double sparsity = 0.5;
  auto* positions_opt =
      graph_cmd->add_option("--positions", positions_path, "Positions JSON file");
  auto* radius_opt = graph_cmd->add_option("--radius-km,--radius", radius_km,
                                           "Link radius in km");
  graph_cmd->add_option("--noise", noise, "Weight noise amplitude")
      ->capture_default_str();
  auto* synthetic_flag = graph_cmd->add_flag("--synthetic", synthetic,
                                             "Generate a synthetic instance");
  auto* n_opt = graph_cmd->add_option("--n", n, "Synthetic node count");
  graph_cmd->add_option("--sparsity", sparsity, "Synthetic sparsity in [0, 1]")
      ->capture_default_str();
  positions_opt->excludes(synthetic_flag);
  positions_opt->needs(radius_opt);
  synthetic_flag->needs(n_opt);

  auto* solve_cmd =
      app.add_subcommand("solve", "Run coalition structure generation on a graph");
  std::string graph_path;
  int kmax_value = 0;
  std::string sampler = "anneal";
  std::string selection = "lowest";
  int reads = 1000;
  int sweeps = 1000;
  solve_cmd->add_option("--graph", graph_path, "Graph JSON file")->required();
  auto* kmax_opt = solve_cmd->add_option("--kmax", kmax_value,
                                         "Maximum coalition size (default: unbounded)");
  solve_cmd->add_option("--sampler", sampler, "Split solver")
      ->check(CLI::IsMember({"anneal", "exhaustive"}))
      ->capture_default_str();
  solve_cmd->add_option("--selection", selection, "Split sample selection rule")
      ->check(CLI::IsMember({"lowest", "frequent"}))
      ->capture_default_str();
  solve_cmd->add_option("--reads", reads, "Anneal reads per split")
      ->capture_default_str();
  solve_cmd->add_option("--sweeps", sweeps, "Anneal sweeps per read")
      ->capture_default_str();

  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark study");
  std::string config_path;
  bench_cmd->add_option("--config", config_path, "Experiment config JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // --help, exit 0
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help() << "\n" << e.what() << "\n";
    return 1;
  }

  try {
    if (parse_cmd->parsed()) return run_parse(tle_path, at, allow_stale, global);
    if (graph_cmd->parsed()) {
      if (!synthetic && positions_path.empty()) {
        std::cerr << "graph needs either --positions or --synthetic\n";
        return 1;
      }
      return run_graph(positions_path, radius_km, noise, synthetic, n, sparsity,
                       global);
    }
    if (solve_cmd->parsed()) {
      const std::optional<int> kmax =
          kmax_opt->count() > 0 ? std::optional<int>(kmax_value) : std::nullopt;
      return run_solve(graph_path, kmax, sampler, selection, reads, sweeps, global);
    }
    if (bench_cmd->parsed()) return run_bench(config_path, global);
    std::cerr << app.help() << "\n";
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
