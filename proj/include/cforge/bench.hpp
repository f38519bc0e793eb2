#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cforge/gcsq.hpp"
#include "cforge/json_io.hpp"
#include "cforge/netgraph.hpp"
#include "cforge/sampler.hpp"

namespace cforge::bench {

enum class Study { kSparsitySweep, kSplitQuality, kStarlink };

std::string study_name(Study study);
Study study_from_name(const std::string& name);
std::string solver_name(SamplerKind kind);
SamplerKind solver_from_name(const std::string& name);

// One experiment description; JSON mirrors the field names.
struct ExperimentConfig {
  Study study = Study::kSparsitySweep;
  std::vector<int> sizes;
  std::vector<double> sparsities = {0.0, 0.5, 1.0};
  std::vector<std::uint64_t> seeds = {1, 2, 3};
  std::vector<SamplerKind> solvers = {SamplerKind::kAnneal, SamplerKind::kExhaustive};
  AnnealParams anneal;                 // per-cell seed is filled at run time
  std::optional<int> kmax;             // starlink defaults to 5
  std::string timestamp;               // starlink: propagation time (RFC3339)
  double radius_km = 0.0;              // starlink: link radius
  double noise_amplitude = 1.5;        // starlink: weight noise
  std::string tle_path;                // starlink: 3LE fixture
  bool allow_stale = false;            // starlink: lift the 7-day epoch window
  std::string out_dir = "bench_out";

  void validate() const;  // throws std::invalid_argument
};

ExperimentConfig config_from_json(const Json& j);
Json config_to_json(const ExperimentConfig& cfg);

// One measured cell. Optional metrics stay empty where a study does not
// produce them (e.g. link counts outside the starlink study).
struct RunRecord {
  std::string study;
  int n = 0;
  std::optional<double> sparsity;
  std::uint64_t seed = 0;
  std::string solver;
  double wall_time_seconds = 0.0;
  std::optional<double> best_cost;
  std::optional<double> most_frequent_cost;
  std::optional<double> exact_cost;
  std::optional<double> structure_value;
  std::optional<std::int64_t> links_before;
  std::optional<std::int64_t> links_after;
  bool improving_split = false;
  bool skipped = false;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

// Energy of the best sampled proper split (at least one free variable on
// side 1), or nullopt when every sample keeps the coalition whole. A value
// below zero means the sampler found an improving split.
std::optional<double> lowest_proper_cost(const SampleSet& set);

// Runtime study: per (n, sparsity, seed, solver) cell, generate the
// synthetic graph and time one grand-coalition split solve (one discarded
// warm-up solve per cell; generation and I/O excluded from the clock).
// Solver caps exceeded mark the record skipped rather than failing.
std::vector<RunRecord> run_sparsity_sweep(const ExperimentConfig& cfg);

// Split-quality study: per (n, sparsity, seed) cell, record the annealer's
// best and most-frequent sampled cut cost next to the exhaustive optimum.
std::vector<RunRecord> run_split_quality(const ExperimentConfig& cfg);

struct StarlinkRun {
  std::uint64_t seed = 0;
  double wall_time_seconds = 0.0;
  double structure_value = 0.0;
  LinkStats links;
  std::map<int, std::int64_t> size_histogram;  // coalition size -> count
};

struct StarlinkReport {
  int satellite_count = 0;
  std::int64_t graph_edges = 0;
  double mean_degree = 0.0;
  std::vector<StarlinkRun> runs;
  std::vector<RunRecord> records;
  std::vector<std::string> warnings;
};

// Constellation study: parse the 3LE fixture, propagate to cfg.timestamp,
// build the geometric graph (re-seeded per run seed) and run size-capped
// GCS-Q, reporting link counts before/after and the coalition histogram.
StarlinkReport run_starlink(const ExperimentConfig& cfg);
Json starlink_report_to_json(const StarlinkReport& report, const ExperimentConfig& cfg);

enum class ReportFormat { kCsv, kJson };

// Serialized records with a provenance header echoing the config; CSV and
// JSON carry the same rows and parse back to equal records.
std::string records_to_csv(const std::vector<RunRecord>& records,
                           const ExperimentConfig& cfg);
std::vector<RunRecord> records_from_csv(const std::string& text);
Json records_to_json(const std::vector<RunRecord>& records,
                     const ExperimentConfig& cfg);
std::vector<RunRecord> records_from_json(const Json& j);

struct AggregateRow {
  std::string study;
  int n = 0;
  std::optional<double> sparsity;
  std::string solver;
  std::string metric;
  int count = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double stddev = 0.0;  // sample stddev, n-1 denominator
};

// Per-cell statistics across seeds, keyed (study, n, sparsity, solver),
// one row per available metric, deterministically ordered.
std::vector<AggregateRow> aggregate_records(const std::vector<RunRecord>& records);
std::string aggregates_to_csv(const std::vector<AggregateRow>& rows);

// Writes one report file (records in the chosen format) and returns path.
std::string write_report(const std::vector<RunRecord>& records, ReportFormat format,
                         const std::string& path, const ExperimentConfig& cfg);

// Writes records.csv, records.json and aggregate.csv into cfg.out_dir;
// returns the paths written.
std::vector<std::string> write_reports(const std::vector<RunRecord>& records,
                                       const ExperimentConfig& cfg);

}  // namespace cforge::bench
