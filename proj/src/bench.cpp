#include "cforge/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <nlohmann/json.hpp>

namespace cforge::bench {

namespace {

constexpr const char* kRecordHeader =
    "study,n,sparsity,seed,solver,wall_time_seconds,best_cost,"
    "most_frequent_cost,exact_cost,structure_value,links_before,links_after,"
    "improving_split,skipped";

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string double_to_string(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return std::string(buf, end);
}

double double_from_string(std::string_view text) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw std::invalid_argument("unparseable number '" + std::string(text) + "'");
  }
  return value;
}

template <typename T>
T int_from_string(std::string_view text) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw std::invalid_argument("unparseable integer '" + std::string(text) + "'");
  }
  return value;
}

std::unique_ptr<Sampler> make_sampler(SamplerKind kind, const AnnealParams& anneal,
                                      std::uint64_t seed) {
  if (kind == SamplerKind::kExhaustive) return std::make_unique<ExhaustiveSampler>();
  AnnealParams p = anneal;
  p.seed = seed;
  return std::make_unique<AnnealSampler>(p);
}

void sort_records(std::vector<RunRecord>& records) {
  std::sort(records.begin(), records.end(),
            [](const RunRecord& a, const RunRecord& b) {
              return std::tuple(a.study, a.n, a.sparsity.value_or(-1.0), a.seed,
                                a.solver) < std::tuple(b.study, b.n,
                                                       b.sparsity.value_or(-1.0),
                                                       b.seed, b.solver);
            });
}

struct SolvedCell {
  SampleSet set;
  double seconds = 0.0;
};

// One warm-up solve is discarded before the timed one so the measurement
// excludes first-touch effects.
SolvedCell timed_solve(const Sampler& sampler, const Qubo& qubo) {
  (void)sampler.sample(qubo);
  const auto start = std::chrono::steady_clock::now();
  SampleSet set = sampler.sample(qubo);
  return {std::move(set), elapsed_seconds(start)};
}

RunRecord sweep_cell(const ExperimentConfig& cfg, int n, double sparsity,
                     std::uint64_t seed, SamplerKind kind) {
  RunRecord rec;
  rec.study = study_name(cfg.study);
  rec.n = n;
  rec.sparsity = sparsity;
  rec.seed = seed;
  rec.solver = solver_name(kind);

  const WeightedGraph graph = generate_synthetic_graph(n, sparsity, seed);
  auto [qubo, vars] = build_split_qubo(graph, Coalition::full(n), true);
  if (kind == SamplerKind::kExhaustive && qubo.num_vars() > kExhaustiveVarCap) {
    rec.skipped = true;
    return rec;
  }
  const auto sampler = make_sampler(kind, cfg.anneal, seed);
  SolvedCell solved = timed_solve(*sampler, qubo);
  rec.wall_time_seconds = solved.seconds;
  rec.best_cost = solved.set.lowest().energy;
  rec.most_frequent_cost = most_frequent_sample(solved.set).energy;
  if (kind == SamplerKind::kExhaustive) rec.exact_cost = rec.best_cost;
  const auto proper = lowest_proper_cost(solved.set);
  rec.improving_split = proper && *proper < 0.0;
  return rec;
}

RunRecord quality_cell(const ExperimentConfig& cfg, int n, double sparsity,
                       std::uint64_t seed) {
  RunRecord rec;
  rec.study = study_name(cfg.study);
  rec.n = n;
  rec.sparsity = sparsity;
  rec.seed = seed;
  rec.solver = solver_name(SamplerKind::kAnneal);

  const WeightedGraph graph = generate_synthetic_graph(n, sparsity, seed);
  auto [qubo, vars] = build_split_qubo(graph, Coalition::full(n), true);
  const auto sampler = make_sampler(SamplerKind::kAnneal, cfg.anneal, seed);
  SolvedCell solved = timed_solve(*sampler, qubo);
  rec.wall_time_seconds = solved.seconds;
  rec.best_cost = solved.set.lowest().energy;
  rec.most_frequent_cost = most_frequent_sample(solved.set).energy;
  rec.exact_cost = exhaustive_sample(qubo).lowest().energy;
  const auto proper = lowest_proper_cost(solved.set);
  rec.improving_split = proper && *proper < 0.0;
  return rec;
}

std::string join_csv_fields(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += fields[i];
  }
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      return fields;
    }
    fields.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

template <typename T, typename Fmt>
std::string join_list(const std::vector<T>& values, Fmt fmt) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += fmt(values[i]);
  }
  return out;
}

std::vector<std::string> provenance_lines(const ExperimentConfig& cfg) {
  std::vector<std::string> lines;
  lines.push_back("# coalition-forge bench records");
  lines.push_back("# study: " + study_name(cfg.study));
  lines.push_back("# sizes: " + join_list(cfg.sizes, [](int v) {
                    return std::to_string(v);
                  }));
  lines.push_back("# sparsities: " + join_list(cfg.sparsities, double_to_string));
  lines.push_back("# seeds: " + join_list(cfg.seeds, [](std::uint64_t v) {
                    return std::to_string(v);
                  }));
  lines.push_back("# solvers: " + join_list(cfg.solvers, solver_name));
  lines.push_back("# anneal: num_reads=" + std::to_string(cfg.anneal.num_reads) +
                  " sweeps_per_read=" + std::to_string(cfg.anneal.sweeps_per_read) +
                  " beta_start=" + double_to_string(cfg.anneal.beta_start) +
                  " beta_end=" + double_to_string(cfg.anneal.beta_end));
  lines.push_back("# kmax: " +
                  (cfg.kmax ? std::to_string(*cfg.kmax) : std::string("unbounded")));
  lines.push_back("# rng: mt19937_64 seeded via splitmix64-derived per-purpose streams");
  if (cfg.study == Study::kStarlink) {
    lines.push_back("# timestamp: " + cfg.timestamp);
    lines.push_back("# radius_km: " + double_to_string(cfg.radius_km));
    lines.push_back("# noise_amplitude: " + double_to_string(cfg.noise_amplitude));
    lines.push_back("# tle_path: " + cfg.tle_path);
  }
  return lines;
}

}  // namespace

// The pinned variable keeps side 0 occupied, so any set bit makes the
// split proper; samples are energy-sorted, so the first hit is lowest.
std::optional<double> lowest_proper_cost(const SampleSet& set) {
  for (const auto& s : set.samples()) {
    for (const auto bit : s.assignment) {
      if (bit) return s.energy;
    }
  }
  return std::nullopt;
}

std::string study_name(Study study) {
  switch (study) {
    case Study::kSparsitySweep:
      return "sparsity_sweep";
    case Study::kSplitQuality:
      return "split_quality";
    case Study::kStarlink:
      return "starlink";
  }
  throw std::invalid_argument("unknown study");
}

Study study_from_name(const std::string& name) {
  if (name == "sparsity_sweep" || name == "sparsitySweep") return Study::kSparsitySweep;
  if (name == "split_quality" || name == "splitQuality") return Study::kSplitQuality;
  if (name == "starlink") return Study::kStarlink;
  throw std::invalid_argument("unknown study '" + name + "'");
}

std::string solver_name(SamplerKind kind) {
  return kind == SamplerKind::kExhaustive ? "exhaustive" : "anneal";
}

SamplerKind solver_from_name(const std::string& name) {
  if (name == "anneal") return SamplerKind::kAnneal;
  if (name == "exhaustive") return SamplerKind::kExhaustive;
  throw std::invalid_argument("unknown solver '" + name + "'");
}

void ExperimentConfig::validate() const {
  if (seeds.empty()) throw std::invalid_argument("config needs at least one seed");
  anneal.validate();
  if (kmax && *kmax < 1) throw std::invalid_argument("kmax must be >= 1");
  if (study == Study::kStarlink) {
    if (tle_path.empty()) throw std::invalid_argument("starlink study needs tle_path");
    if (timestamp.empty()) throw std::invalid_argument("starlink study needs timestamp");
    if (!(radius_km > 0.0)) throw std::invalid_argument("starlink study needs radius_km > 0");
    if (!(noise_amplitude >= 0.0)) {
      throw std::invalid_argument("noise_amplitude must be >= 0");
    }
    return;
  }
  if (sizes.empty()) throw std::invalid_argument("config needs at least one size");
  for (int n : sizes) {
    if (n < 2) throw std::invalid_argument("sizes must be >= 2");
    if (study == Study::kSplitQuality && n - 1 > kExhaustiveVarCap) {
      throw std::invalid_argument(
          "split_quality sizes must stay within the exhaustive cap (n <= " +
          std::to_string(kExhaustiveVarCap + 1) + ")");
    }
  }
  if (sparsities.empty()) throw std::invalid_argument("config needs sparsities");
  for (double s : sparsities) {
    if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("sparsity must lie in [0, 1]");
  }
  if (study == Study::kSparsitySweep && solvers.empty()) {
    throw std::invalid_argument("config needs at least one solver");
  }
}

std::vector<RunRecord> run_sparsity_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<RunRecord> records;
  for (int n : cfg.sizes) {
    for (double sparsity : cfg.sparsities) {
      for (std::uint64_t seed : cfg.seeds) {
        for (SamplerKind kind : cfg.solvers) {
          records.push_back(sweep_cell(cfg, n, sparsity, seed, kind));
        }
      }
    }
  }
  sort_records(records);
  return records;
}

std::vector<RunRecord> run_split_quality(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<RunRecord> records;
  for (int n : cfg.sizes) {
    for (double sparsity : cfg.sparsities) {
      for (std::uint64_t seed : cfg.seeds) {
        records.push_back(quality_cell(cfg, n, sparsity, seed));
      }
    }
  }
  sort_records(records);
  return records;
}

StarlinkReport run_starlink(const ExperimentConfig& cfg) {
  cfg.validate();
  StarlinkReport report;

  const ParseResult parsed = parse_3le(read_text_file(cfg.tle_path));
  report.warnings = parsed.warnings;
  report.satellite_count = static_cast<int>(parsed.records.size());
  if (parsed.records.empty()) {
    throw std::runtime_error("no usable records in " + cfg.tle_path);
  }
  const UtcMicros when = parse_rfc3339(cfg.timestamp);
  std::vector<StateVector> states;
  states.reserve(parsed.records.size());
  for (const auto& rec : parsed.records) {
    states.push_back(propagate(rec, when, cfg.allow_stale));
  }

  const int kmax = cfg.kmax.value_or(5);
  for (std::uint64_t seed : cfg.seeds) {
    WeightModel model;
    model.mode = WeightMode::kStarlink;
    model.noise_amplitude = cfg.noise_amplitude;
    model.seed = seed;
    const WeightedGraph graph = build_geometric_graph(states, cfg.radius_km, model);
    if (report.runs.empty()) {
      report.graph_edges = graph.edge_count();
      report.mean_degree =
          graph.node_count() > 0
              ? 2.0 * static_cast<double>(graph.edge_count()) / graph.node_count()
              : 0.0;
      if (graph.edge_count() == 0) {
        report.warnings.push_back(
            "radius " + double_to_string(cfg.radius_km) +
            " km filtered out every link; the graph is edgeless and every "
            "satellite forms a singleton coalition");
      }
    }

    GcsqOptions opts;
    opts.kmax = kmax;
    opts.sampler = SamplerKind::kAnneal;
    opts.anneal = cfg.anneal;
    opts.anneal.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    const GcsqResult result = run_gcsq(graph, opts);
    const double seconds = elapsed_seconds(start);

    StarlinkRun run;
    run.seed = seed;
    run.wall_time_seconds = seconds;
    run.structure_value = result.value;
    run.links = link_stats(graph, result.structure);
    for (const auto& c : result.structure.coalitions) ++run.size_histogram[c.size()];
    report.runs.push_back(run);

    RunRecord rec;
    rec.study = study_name(cfg.study);
    rec.n = graph.node_count();
    rec.seed = seed;
    rec.solver = solver_name(SamplerKind::kAnneal);
    rec.wall_time_seconds = seconds;
    rec.structure_value = result.value;
    rec.links_before = run.links.links_before;
    rec.links_after = run.links.links_after;
    for (const auto& entry : result.trace) {
      if (entry.decision.accepted && entry.decision.reason == SplitReason::kImproving) {
        rec.improving_split = true;
        break;
      }
    }
    report.records.push_back(std::move(rec));
  }
  sort_records(report.records);
  return report;
}

Json starlink_report_to_json(const StarlinkReport& report, const ExperimentConfig& cfg) {
  Json runs = Json::array();
  for (const auto& run : report.runs) {
    Json histogram = Json::object();
    for (const auto& [size, count] : run.size_histogram) {
      histogram[std::to_string(size)] = count;
    }
    runs.push_back(Json{{"seed", run.seed},
                        {"wall_time_seconds", run.wall_time_seconds},
                        {"structure_value", run.structure_value},
                        {"links_before", run.links.links_before},
                        {"links_after", run.links.links_after},
                        {"coalition_count", run.links.coalition_count},
                        {"size_histogram", std::move(histogram)}});
  }
  return Json{{"study", study_name(Study::kStarlink)},
              {"satellite_count", report.satellite_count},
              {"graph_edges", report.graph_edges},
              {"mean_degree", report.mean_degree},
              {"runs", std::move(runs)},
              {"warnings", report.warnings},
              {"meta", config_to_json(cfg)}};
}

std::string records_to_csv(const std::vector<RunRecord>& records,
                           const ExperimentConfig& cfg) {
  const auto opt_double = [](const std::optional<double>& v) {
    return v ? double_to_string(*v) : std::string();
  };
  const auto opt_int = [](const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };

  std::string out;
  for (const auto& line : provenance_lines(cfg)) {
    out += line;
    out += '\n';
  }
  out += kRecordHeader;
  out += '\n';
  for (const auto& r : records) {
    out += join_csv_fields({r.study, std::to_string(r.n), opt_double(r.sparsity),
                            std::to_string(r.seed), r.solver,
                            double_to_string(r.wall_time_seconds),
                            opt_double(r.best_cost), opt_double(r.most_frequent_cost),
                            opt_double(r.exact_cost), opt_double(r.structure_value),
                            opt_int(r.links_before), opt_int(r.links_after),
                            r.improving_split ? "true" : "false",
                            r.skipped ? "true" : "false"});
    out += '\n';
  }
  return out;
}

std::vector<RunRecord> records_from_csv(const std::string& text) {
  std::vector<RunRecord> records;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kRecordHeader) {
        throw std::invalid_argument("unexpected CSV header on line " +
                                    std::to_string(line_no));
      }
      header_seen = true;
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 14) {
      throw std::invalid_argument("expected 14 CSV fields on line " +
                                  std::to_string(line_no));
    }
    const auto opt_double = [](const std::string& f) {
      return f.empty() ? std::optional<double>() : std::optional<double>(double_from_string(f));
    };
    const auto opt_int = [](const std::string& f) {
      return f.empty() ? std::optional<std::int64_t>()
                       : std::optional<std::int64_t>(int_from_string<std::int64_t>(f));
    };
    RunRecord r;
    r.study = fields[0];
    r.n = int_from_string<int>(fields[1]);
    r.sparsity = opt_double(fields[2]);
    r.seed = int_from_string<std::uint64_t>(fields[3]);
    r.solver = fields[4];
    r.wall_time_seconds = double_from_string(fields[5]);
    r.best_cost = opt_double(fields[6]);
    r.most_frequent_cost = opt_double(fields[7]);
    r.exact_cost = opt_double(fields[8]);
    r.structure_value = opt_double(fields[9]);
    r.links_before = opt_int(fields[10]);
    r.links_after = opt_int(fields[11]);
    r.improving_split = fields[12] == "true";
    r.skipped = fields[13] == "true";
    records.push_back(std::move(r));
  }
  if (!header_seen) throw std::invalid_argument("CSV is missing its header row");
  return records;
}

Json records_to_json(const std::vector<RunRecord>& records,
                     const ExperimentConfig& cfg) {
  Json rows = Json::array();
  for (const auto& r : records) {
    Json row{{"study", r.study},
             {"n", r.n},
             {"seed", r.seed},
             {"solver", r.solver},
             {"wall_time_seconds", r.wall_time_seconds},
             {"improving_split", r.improving_split},
             {"skipped", r.skipped}};
    row["sparsity"] = r.sparsity ? Json(*r.sparsity) : Json();
    row["best_cost"] = r.best_cost ? Json(*r.best_cost) : Json();
    row["most_frequent_cost"] = r.most_frequent_cost ? Json(*r.most_frequent_cost) : Json();
    row["exact_cost"] = r.exact_cost ? Json(*r.exact_cost) : Json();
    row["structure_value"] = r.structure_value ? Json(*r.structure_value) : Json();
    row["links_before"] = r.links_before ? Json(*r.links_before) : Json();
    row["links_after"] = r.links_after ? Json(*r.links_after) : Json();
    rows.push_back(std::move(row));
  }
  Json meta = config_to_json(cfg);
  meta["rng"] = "mt19937_64 seeded via splitmix64-derived per-purpose streams";
  return Json{{"meta", std::move(meta)}, {"records", std::move(rows)}};
}

std::vector<RunRecord> records_from_json(const Json& j) {
  const Json& rows = j.is_array() ? j : j.at("records");
  std::vector<RunRecord> records;
  for (const auto& row : rows) {
    RunRecord r;
    r.study = row.at("study").get<std::string>();
    r.n = row.at("n").get<int>();
    r.seed = row.at("seed").get<std::uint64_t>();
    r.solver = row.at("solver").get<std::string>();
    r.wall_time_seconds = row.at("wall_time_seconds").get<double>();
    r.improving_split = row.at("improving_split").get<bool>();
    r.skipped = row.at("skipped").get<bool>();
    const auto opt_double = [&row](const char* key) {
      return row.at(key).is_null() ? std::optional<double>()
                                   : std::optional<double>(row.at(key).get<double>());
    };
    const auto opt_int = [&row](const char* key) {
      return row.at(key).is_null()
                 ? std::optional<std::int64_t>()
                 : std::optional<std::int64_t>(row.at(key).get<std::int64_t>());
    };
    r.sparsity = opt_double("sparsity");
    r.best_cost = opt_double("best_cost");
    r.most_frequent_cost = opt_double("most_frequent_cost");
    r.exact_cost = opt_double("exact_cost");
    r.structure_value = opt_double("structure_value");
    r.links_before = opt_int("links_before");
    r.links_after = opt_int("links_after");
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<AggregateRow> aggregate_records(const std::vector<RunRecord>& records) {
  using Key = std::tuple<std::string, int, double, std::string>;
  std::map<Key, std::vector<const RunRecord*>> cells;
  for (const auto& r : records) {
    if (r.skipped) continue;
    cells[Key(r.study, r.n, r.sparsity.value_or(-1.0), r.solver)].push_back(&r);
  }

  std::vector<AggregateRow> rows;
  for (const auto& [key, cell] : cells) {
    const auto emit = [&](const std::string& metric, const std::vector<double>& values) {
      if (values.empty()) return;
      AggregateRow row;
      row.study = std::get<0>(key);
      row.n = std::get<1>(key);
      row.sparsity = std::get<2>(key) < 0.0 ? std::optional<double>()
                                            : std::optional<double>(std::get<2>(key));
      row.solver = std::get<3>(key);
      row.metric = metric;
      row.count = static_cast<int>(values.size());
      row.min = *std::min_element(values.begin(), values.end());
      row.max = *std::max_element(values.begin(), values.end());
      double sum = 0.0;
      for (double v : values) sum += v;
      row.mean = sum / static_cast<double>(values.size());
      if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - row.mean) * (v - row.mean);
        row.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
      }
      rows.push_back(std::move(row));
    };

    std::vector<double> wall, best, freq, exact, value, before, after;
    for (const RunRecord* r : cell) {
      wall.push_back(r->wall_time_seconds);
      if (r->best_cost) best.push_back(*r->best_cost);
      if (r->most_frequent_cost) freq.push_back(*r->most_frequent_cost);
      if (r->exact_cost) exact.push_back(*r->exact_cost);
      if (r->structure_value) value.push_back(*r->structure_value);
      if (r->links_before) before.push_back(static_cast<double>(*r->links_before));
      if (r->links_after) after.push_back(static_cast<double>(*r->links_after));
    }
    emit("wall_time_seconds", wall);
    emit("best_cost", best);
    emit("most_frequent_cost", freq);
    emit("exact_cost", exact);
    emit("structure_value", value);
    emit("links_before", before);
    emit("links_after", after);
  }
  return rows;
}

std::string aggregates_to_csv(const std::vector<AggregateRow>& rows) {
  std::string out = "study,n,sparsity,solver,metric,count,mean,min,max,stddev\n";
  for (const auto& row : rows) {
    out += join_csv_fields(
        {row.study, std::to_string(row.n),
         row.sparsity ? double_to_string(*row.sparsity) : std::string(),
         row.solver, row.metric, std::to_string(row.count),
         double_to_string(row.mean), double_to_string(row.min),
         double_to_string(row.max), double_to_string(row.stddev)});
    out += '\n';
  }
  return out;
}

std::string write_report(const std::vector<RunRecord>& records, ReportFormat format,
                         const std::string& path, const ExperimentConfig& cfg) {
  if (records.empty()) throw std::invalid_argument("no records to write");
  if (format == ReportFormat::kCsv) {
    write_text_file(path, records_to_csv(records, cfg));
  } else {
    write_text_file(path, dump_json(records_to_json(records, cfg)));
  }
  return path;
}

std::vector<std::string> write_reports(const std::vector<RunRecord>& records,
                                       const ExperimentConfig& cfg) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);
  const auto in_dir = [&](const char* name) {
    return (fs::path(cfg.out_dir) / name).string();
  };
  std::vector<std::string> paths;
  paths.push_back(write_report(records, ReportFormat::kCsv, in_dir("records.csv"), cfg));
  paths.push_back(write_report(records, ReportFormat::kJson, in_dir("records.json"), cfg));
  const std::string agg_path = in_dir("aggregate.csv");
  write_text_file(agg_path, aggregates_to_csv(aggregate_records(records)));
  paths.push_back(agg_path);
  return paths;
}

ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig cfg;
  cfg.study = study_from_name(j.at("study").get<std::string>());
  if (j.contains("sizes")) cfg.sizes = j.at("sizes").get<std::vector<int>>();
  if (j.contains("sparsities")) {
    cfg.sparsities = j.at("sparsities").get<std::vector<double>>();
  }
  if (j.contains("seeds")) cfg.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  if (j.contains("solvers")) {
    cfg.solvers.clear();
    for (const auto& s : j.at("solvers")) {
      cfg.solvers.push_back(solver_from_name(s.get<std::string>()));
    }
  }
  if (j.contains("anneal")) {
    const Json& a = j.at("anneal");
    if (a.contains("num_reads")) cfg.anneal.num_reads = a.at("num_reads").get<int>();
    if (a.contains("sweeps_per_read")) {
      cfg.anneal.sweeps_per_read = a.at("sweeps_per_read").get<int>();
    }
    if (a.contains("beta_start")) cfg.anneal.beta_start = a.at("beta_start").get<double>();
    if (a.contains("beta_end")) cfg.anneal.beta_end = a.at("beta_end").get<double>();
  }
  if (j.contains("kmax") && !j.at("kmax").is_null()) {
    cfg.kmax = j.at("kmax").get<int>();
  }
  if (j.contains("timestamp")) cfg.timestamp = j.at("timestamp").get<std::string>();
  if (j.contains("radius_km")) cfg.radius_km = j.at("radius_km").get<double>();
  if (j.contains("noise_amplitude")) {
    cfg.noise_amplitude = j.at("noise_amplitude").get<double>();
  }
  if (j.contains("tle_path")) cfg.tle_path = j.at("tle_path").get<std::string>();
  if (j.contains("allow_stale")) cfg.allow_stale = j.at("allow_stale").get<bool>();
  if (j.contains("out_dir")) cfg.out_dir = j.at("out_dir").get<std::string>();
  cfg.validate();
  return cfg;
}

Json config_to_json(const ExperimentConfig& cfg) {
  Json out{{"study", study_name(cfg.study)},
           {"sizes", cfg.sizes},
           {"sparsities", cfg.sparsities},
           {"seeds", cfg.seeds},
           {"anneal",
            Json{{"num_reads", cfg.anneal.num_reads},
                 {"sweeps_per_read", cfg.anneal.sweeps_per_read},
                 {"beta_start", cfg.anneal.beta_start},
                 {"beta_end", cfg.anneal.beta_end}}},
           {"noise_amplitude", cfg.noise_amplitude},
           {"out_dir", cfg.out_dir}};
  Json solvers = Json::array();
  for (SamplerKind kind : cfg.solvers) solvers.push_back(solver_name(kind));
  out["solvers"] = std::move(solvers);
  out["kmax"] = cfg.kmax ? Json(*cfg.kmax) : Json();
  if (cfg.study == Study::kStarlink) {
    out["timestamp"] = cfg.timestamp;
    out["radius_km"] = cfg.radius_km;
    out["tle_path"] = cfg.tle_path;
    out["allow_stale"] = cfg.allow_stale;
  }
  return out;
}

}  // namespace cforge::bench
