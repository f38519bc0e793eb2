// Acceptance harness: each criterion is one self-contained check printing a
// single [PASS]/[FAIL] line. Run with a criterion number (1-9) to check one,
// or with no arguments to run them all; the exit code is the failure count.

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cforge/bench.hpp"
#include "cforge/gcsq.hpp"
#include "cforge/graph.hpp"
#include "cforge/json_io.hpp"
#include "cforge/netgraph.hpp"
#include "cforge/partition_oracle.hpp"
#include "cforge/qubo.hpp"
#include "cforge/sampler.hpp"
#include "cforge/tle.hpp"
#include "cforge/utc.hpp"
#include "oracles.hpp"

namespace {

using namespace cforge;

constexpr double kPi = std::numbers::pi;
const std::string kFixturePath = std::string(CFORGE_DATA_DIR) + "/starlink_sample.3le";

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(const std::string& detail) { return {false, detail}; }
Outcome pass(const std::string& detail) { return {true, detail}; }

std::vector<int> all_members(int n) {
  std::vector<int> members(n);
  for (int i = 0; i < n; ++i) members[i] = i;
  return members;
}

WeightedGraph complete_graph(int n, double weight) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, weight});
  }
  return WeightedGraph(n, std::move(edges));
}

constexpr double kSparsityCycle[3] = {0.0, 0.5, 1.0};

// 1. The split QUBO's minimum energy equals the brute-force minimum cut over
//    every bipartition, on 200 random mixed-sign graphs with n in [2, 12].
Outcome criterion_qubo() {
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 11;
    const double sparsity = kSparsityCycle[i % 3];
    const WeightedGraph g = generate_synthetic_graph(n, sparsity, 1000 + i);
    const SplitQubo built = build_split_qubo(g, Coalition::full(n), true);
    const double sampled = exhaustive_sample(built.qubo).lowest().energy;
    const double brute = oracles::min_cut_all_subsets(n, g.edges(), all_members(n)).value;
    if (std::abs(sampled - brute) >= 1e-9) {
      std::ostringstream msg;
      msg << "graph " << i << " (n=" << n << "): qubo min " << sampled
          << " vs brute-force " << brute;
      return fail(msg.str());
    }
  }
  return pass("200/200 graphs match brute-force minimum cuts within 1e-9");
}

// 2. The annealer (1000 reads) finds the exact minimum-cut energy on at least
//    95 of 100 instances with n <= 12; the most frequent sample matches it on
//    at least 80.
Outcome criterion_sampler() {
  int best_hits = 0;
  int frequent_hits = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 6 + i % 7;
    const double sparsity = kSparsityCycle[i % 3];
    const WeightedGraph g = generate_synthetic_graph(n, sparsity, 2000 + i);
    const SplitQubo built = build_split_qubo(g, Coalition::full(n), true);
    const double exact = exhaustive_sample(built.qubo).lowest().energy;
    AnnealParams params;
    params.num_reads = 1000;
    params.seed = 97 * i + 5;
    const SampleSet set = anneal_sample(built.qubo, params);
    if (std::abs(set.lowest().energy - exact) < 1e-9) ++best_hits;
    if (std::abs(most_frequent_sample(set).energy - exact) < 1e-9) ++frequent_hits;
  }
  std::ostringstream msg;
  msg << "best hit " << best_hits << "/100 (need >= 95), most-frequent hit "
      << frequent_hits << "/100 (need >= 80)";
  return (best_hits >= 95 && frequent_hits >= 80) ? pass(msg.str()) : fail(msg.str());
}

// 3. Coalition search with the exhaustive split solver never beats the exact
//    partition optimum and reaches at least 0.95x of it on average over 50
//    random graphs with n <= 9.
Outcome criterion_quality() {
  double ratio_sum = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int n = 4 + i % 6;
    const double sparsity = kSparsityCycle[i % 3];
    const WeightedGraph g = generate_synthetic_graph(n, sparsity, 3000 + i);
    GcsqOptions opts;
    opts.sampler = SamplerKind::kExhaustive;
    const GcsqResult result = run_gcsq(g, opts);
    const OracleResult oracle = exact_partition_oracle(g);
    if (result.value > oracle.value + 1e-9) {
      std::ostringstream msg;
      msg << "graph " << i << ": search value " << result.value
          << " exceeds the exact optimum " << oracle.value;
      return fail(msg.str());
    }
    ratio_sum += oracle.value < 1e-12 ? 1.0 : result.value / oracle.value;
  }
  const double mean_ratio = ratio_sum / 50.0;
  std::ostringstream msg;
  msg << "never above the optimum; mean value ratio " << mean_ratio
      << " (need >= 0.95)";
  return mean_ratio >= 0.95 ? pass(msg.str()) : fail(msg.str());
}

// 4. Unconstrained runs on 100 random graphs: non-negative weights give the
//    connected components, accepted splits strictly raise the structure
//    value, and a fixed seed reproduces the result exactly.
Outcome criterion_invariants() {
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + i % 10;
    const double sparsity = kSparsityCycle[i % 3];
    const WeightedGraph g = generate_synthetic_graph(n, sparsity, 4000 + i);

    GcsqOptions opts;
    opts.anneal.num_reads = 200;
    opts.anneal.sweeps_per_read = 200;
    opts.anneal.seed = 50 + i;

    std::vector<Edge> nonneg = g.edges();
    for (Edge& e : nonneg) e.weight = std::abs(e.weight);
    const WeightedGraph g_pos(n, std::move(nonneg));
    const GcsqResult positive = run_gcsq(g_pos, opts);
    if (positive.structure.coalitions !=
        connected_components(g_pos, Coalition::full(n))) {
      return fail("non-negative graph " + std::to_string(i) +
                  " did not return its connected components");
    }

    const GcsqResult result = run_gcsq(g, opts);
    double base = 0.0;
    for (const Coalition& c : connected_components(g, Coalition::full(n))) {
      base += coalition_value(g, c);
    }
    double cut_total = 0.0;
    for (const TraceEntry& entry : result.trace) {
      if (!entry.decision.accepted) continue;
      if (!(entry.decision.cut_value < 0.0)) {
        return fail("graph " + std::to_string(i) +
                    " accepted a split that does not strictly improve");
      }
      cut_total += entry.decision.cut_value;
    }
    if (std::abs(result.value - (base - cut_total)) >= 1e-9) {
      return fail("graph " + std::to_string(i) +
                  " value does not equal components value minus accepted cuts");
    }

    const GcsqResult replay = run_gcsq(g, opts);
    if (replay.structure != result.structure || replay.value != result.value) {
      return fail("graph " + std::to_string(i) + " is not deterministic");
    }
  }
  return pass("components, strict improvement and determinism hold on 100 graphs");
}

// 5. On all-positive complete graphs K6..K12 with a size cap of 5, every
//    output coalition respects the cap and each forced split takes the
//    minimum proper cut (checked by enumeration for n <= 10).
Outcome criterion_size_cap() {
  for (int n = 6; n <= 12; ++n) {
    const WeightedGraph g = complete_graph(n, 1.0);
    GcsqOptions opts;
    opts.kmax = 5;
    opts.sampler = SamplerKind::kExhaustive;
    const GcsqResult result = run_gcsq(g, opts);
    validate_partition(g, result.structure);
    for (const Coalition& c : result.structure.coalitions) {
      if (c.size() > 5) {
        return fail("K" + std::to_string(n) + " left a coalition of size " +
                    std::to_string(c.size()));
      }
    }
    if (n > 10) continue;
    for (const TraceEntry& entry : result.trace) {
      if (!entry.decision.accepted ||
          entry.decision.reason != SplitReason::kForcedBySize) {
        continue;
      }
      const double best = oracles::min_proper_cut(g.node_count(), g.edges(),
                                                  entry.coalition.members())
                              .value;
      if (std::abs(entry.decision.cut_value - best) >= 1e-9) {
        std::ostringstream msg;
        msg << "K" << n << " forced cut " << entry.decision.cut_value
            << " is not the minimum proper cut " << best;
        return fail(msg.str());
      }
    }
  }
  return pass("K6..K12 outputs respect the cap; forced splits take minimum cuts");
}

// 6. Full constellation pipeline: parse the fixture, propagate to its epoch,
//    build the 3000 km geometric graph (mean degree >= 4) and run capped
//    coalition generation; the structure must save links and be non-trivial.
Outcome criterion_pipeline() {
  const ParseResult parsed = parse_3le(read_text_file(kFixturePath));
  if (parsed.records.size() < 100) {
    return fail("fixture holds only " + std::to_string(parsed.records.size()) +
                " records");
  }
  const UtcMicros when = parse_rfc3339("2025-06-01T00:00:00Z");
  std::vector<StateVector> states;
  states.reserve(parsed.records.size());
  for (const TleRecord& rec : parsed.records) states.push_back(propagate(rec, when));

  WeightModel model;
  model.mode = WeightMode::kStarlink;
  model.seed = 1;
  const WeightedGraph g = build_geometric_graph(states, 3000.0, model);
  const double mean_degree =
      2.0 * g.edge_count() / static_cast<double>(g.node_count());
  if (mean_degree < 4.0) {
    return fail("mean degree " + std::to_string(mean_degree) + " is below 4");
  }

  GcsqOptions opts;
  opts.kmax = 5;
  opts.sampler = SamplerKind::kAnneal;
  opts.anneal.num_reads = 200;
  opts.anneal.sweeps_per_read = 200;
  opts.anneal.seed = 1;
  const GcsqResult result = run_gcsq(g, opts);
  validate_partition(g, result.structure);
  for (const Coalition& c : result.structure.coalitions) {
    if (c.size() > 5) return fail("a coalition exceeds the size cap");
  }
  if (result.structure.coalitions.size() < 2) {
    return fail("the structure collapsed to a single coalition");
  }
  const LinkStats stats = link_stats(g, result.structure);
  std::ostringstream msg;
  msg << parsed.records.size() << " satellites, mean degree " << mean_degree
      << ", links " << stats.links_before << " -> " << stats.links_after;
  if (stats.links_after >= stats.links_before) return fail(msg.str());
  return pass(msg.str());
}

// 7. Element-set numerics: 1000 single-digit corruptions are all rejected by
//    the checksum, Kepler residuals stay below 1e-12 on a 1000-point grid,
//    the circular orbit lands on (a, 0, 0) to 1e-9 km and one full period
//    returns the position to 1e-6 km.
Outcome criterion_numerics() {
  // Checksum fuzzing over the fixture's element lines.
  std::vector<std::array<std::string, 3>> triples;
  {
    std::istringstream in(read_text_file(kFixturePath));
    std::string name, l1, l2;
    while (std::getline(in, name) && std::getline(in, l1) && std::getline(in, l2)) {
      triples.push_back({name, l1, l2});
    }
  }
  if (triples.empty()) return fail("fixture yielded no record triples");
  for (int trial = 0; trial < 1000; ++trial) {
    auto [name, l1, l2] = triples[trial % triples.size()];
    std::string& target = (trial % 2 == 0) ? l1 : l2;
    std::vector<std::size_t> digit_positions;
    for (std::size_t p = 2; p < target.size(); ++p) {
      if (std::isdigit(static_cast<unsigned char>(target[p]))) {
        digit_positions.push_back(p);
      }
    }
    const std::size_t pos = digit_positions[trial % digit_positions.size()];
    const int digit = target[pos] - '0';
    target[pos] = static_cast<char>('0' + (digit + 1 + trial % 9) % 10);
    const ParseResult corrupted = parse_3le(name + "\n" + l1 + "\n" + l2 + "\n");
    if (!corrupted.records.empty() || corrupted.warnings.empty()) {
      return fail("corruption in trial " + std::to_string(trial) +
                  " was not rejected by the checksum");
    }
  }

  // Kepler residuals on a 25 x 40 (e, M) grid, eccentricities up to 0.96.
  for (int ei = 0; ei < 25; ++ei) {
    const double e = 0.04 * ei;
    for (int mi = 0; mi < 40; ++mi) {
      const double m = 2.0 * kPi * mi / 40.0;
      const double ea = solve_kepler(m, e);
      if (std::abs(ea - e * std::sin(ea) - m) >= 1e-12) {
        std::ostringstream msg;
        msg << "Kepler residual above 1e-12 at e=" << e << ", M=" << m;
        return fail(msg.str());
      }
    }
  }

  // Circular equatorial orbit at its epoch sits at (a, 0, 0).
  TleRecord circular;
  circular.name = "CIRCULAR";
  circular.catalog_number = 1;
  circular.epoch = utc_from_civil(2025, 6, 1);
  circular.mean_motion = 15.0;
  const double a = semi_major_axis_km(15.0);
  const Eigen::Vector3d at_epoch = propagate(circular, circular.epoch).position_km;
  if ((at_epoch - Eigen::Vector3d(a, 0.0, 0.0)).norm() >= 1e-9) {
    return fail("circular orbit misses (a, 0, 0) by more than 1e-9 km");
  }

  // One full orbital period returns an eccentric inclined orbit to its start.
  TleRecord orbit;
  orbit.name = "PERIOD";
  orbit.catalog_number = 2;
  orbit.epoch = utc_from_civil(2025, 6, 1);
  orbit.eccentricity = 0.3;
  orbit.inclination = 50.0 * kPi / 180.0;
  orbit.raan = 30.0 * kPi / 180.0;
  orbit.arg_perigee = 40.0 * kPi / 180.0;
  orbit.mean_anomaly = 1.0;
  orbit.mean_motion = 86400.0 / 5738.0;  // one period is exactly 5738 s
  const Eigen::Vector3d start = propagate(orbit, orbit.epoch).position_km;
  const Eigen::Vector3d after =
      propagate(orbit, orbit.epoch + 5738 * kMicrosPerSecond).position_km;
  if ((after - start).norm() >= 1e-6) {
    return fail("position after one period drifted by more than 1e-6 km");
  }

  return pass("1000 corruptions rejected; Kepler, circular and period checks hold");
}

// 8. Synthetic generator: edge counts match the sparsity interpolation
//    exactly for n in [2, 100] x five sparsity levels, and every instance is
//    connected.
Outcome criterion_generator() {
  const double levels[5] = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (int n = 2; n <= 100; ++n) {
    const std::int64_t complete = static_cast<std::int64_t>(n) * (n - 1) / 2;
    for (int li = 0; li < 5; ++li) {
      const double s = levels[li];
      const std::int64_t expected =
          (n - 1) + std::llround((1.0 - s) * static_cast<double>(complete - (n - 1)));
      if (synthetic_edge_count(n, s) != expected) {
        return fail("edge count formula mismatch at n=" + std::to_string(n));
      }
      const WeightedGraph g = generate_synthetic_graph(n, s, 8000 + 5 * n + li);
      if (g.edge_count() != expected) {
        return fail("generated edge count mismatch at n=" + std::to_string(n));
      }
      if (connected_components(g, Coalition::full(n)).size() != 1) {
        return fail("disconnected instance at n=" + std::to_string(n));
      }
    }
  }
  return pass("495 instances match the edge budget exactly and are connected");
}

// 9. Runtime trend from the sparsity sweep: annealer wall time grows
//    sub-exponentially from n=50 to n=200 on dense graphs, while the
//    exhaustive solver's per-variable step ratio over n in [16, 24] is
//    geometrically close to 2.
Outcome criterion_runtime() {
  namespace fs = std::filesystem;
  const fs::path report_root = fs::temp_directory_path() / "cforge_acceptance_reports";

  using namespace cforge::bench;
  const auto min_wall_by_n = [](const std::vector<RunRecord>& records) {
    std::map<int, double> best;
    for (const RunRecord& r : records) {
      const auto it = best.find(r.n);
      if (it == best.end() || r.wall_time_seconds < it->second) {
        best[r.n] = r.wall_time_seconds;
      }
    }
    return best;
  };

  ExperimentConfig anneal_cfg;
  anneal_cfg.study = Study::kSparsitySweep;
  anneal_cfg.sizes = {50, 100, 200};
  anneal_cfg.sparsities = {0.0};
  anneal_cfg.seeds = {1, 2, 3};
  anneal_cfg.solvers = {SamplerKind::kAnneal};
  anneal_cfg.anneal.num_reads = 20;
  anneal_cfg.anneal.sweeps_per_read = 50;
  anneal_cfg.out_dir = (report_root / "anneal").string();
  const auto anneal_records = run_sparsity_sweep(anneal_cfg);
  write_reports(anneal_records, anneal_cfg);

  const auto anneal_wall = min_wall_by_n(anneal_records);
  const double t50 = anneal_wall.at(50);
  const double t100 = anneal_wall.at(100);
  const double t200 = anneal_wall.at(200);
  if (t50 <= 0.0 || t100 <= t50 || t200 <= t100) {
    return fail("annealer wall times are not increasing with n");
  }
  const double d1 = t100 / t50;
  const double d2 = t200 / t100;
  // Exponential growth would square the doubling ratio; polynomial keeps it.
  if (d2 > std::pow(d1, 1.5)) {
    std::ostringstream msg;
    msg << "annealer doubling ratio grew from " << d1 << " to " << d2;
    return fail(msg.str());
  }

  ExperimentConfig exhaustive_cfg;
  exhaustive_cfg.study = Study::kSparsitySweep;
  exhaustive_cfg.sizes = {16, 17, 18, 19, 20, 21, 22, 23, 24};
  exhaustive_cfg.sparsities = {0.0};
  exhaustive_cfg.seeds = {1, 2, 3};
  exhaustive_cfg.solvers = {SamplerKind::kExhaustive};
  exhaustive_cfg.out_dir = (report_root / "exhaustive").string();
  const auto exhaustive_records = run_sparsity_sweep(exhaustive_cfg);
  write_reports(exhaustive_records, exhaustive_cfg);

  const auto exhaustive_wall = min_wall_by_n(exhaustive_records);
  const double step =
      std::pow(exhaustive_wall.at(24) / exhaustive_wall.at(16), 1.0 / 8.0);
  std::ostringstream msg;
  msg << "annealer ratios " << d1 << " then " << d2
      << " (sub-exponential); exhaustive per-variable step " << step
      << " (need 1.6..2.6); reports under " << report_root.string();
  if (step < 1.6 || step > 2.6) return fail(msg.str());
  return pass(msg.str());
}

struct Criterion {
  const char* label;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"split QUBO minima match brute-force cuts", criterion_qubo},
    {"annealer recovers exact minimum cuts", criterion_sampler},
    {"coalition search tracks the exact partition optimum", criterion_quality},
    {"components, strict improvement, determinism", criterion_invariants},
    {"size cap holds and forced splits take minimum cuts", criterion_size_cap},
    {"constellation pipeline reduces link count", criterion_pipeline},
    {"checksum, Kepler and propagation numerics", criterion_numerics},
    {"synthetic generator edge budget and connectivity", criterion_generator},
    {"annealer sub-exponential, exhaustive doubling", criterion_runtime},
};

int run_criterion(int index) {
  const Criterion& c = kCriteria[index - 1];
  Outcome outcome;
  try {
    outcome = c.run();
  } catch (const std::exception& e) {
    outcome = fail(std::string("unexpected exception: ") + e.what());
  }
  std::printf("[%s] criterion %d: %s - %s\n", outcome.ok ? "PASS" : "FAIL", index,
              c.label, outcome.detail.c_str());
  std::fflush(stdout);
  return outcome.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 2) {
    std::fprintf(stderr, "usage: %s [criterion 1-9]\n", argv[0]);
    return 64;
  }
  if (argc == 2) {
    const int index = std::atoi(argv[1]);
    if (index < 1 || index > 9) {
      std::fprintf(stderr, "usage: %s [criterion 1-9]\n", argv[0]);
      return 64;
    }
    return run_criterion(index);
  }
  int failures = 0;
  for (int index = 1; index <= 9; ++index) failures += run_criterion(index);
  return failures;
}
