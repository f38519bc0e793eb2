#include <cmath>
#include <stdexcept>
#include <vector>

#include "cforge/errors.hpp"
#include "cforge/gcsq.hpp"
#include "cforge/partition_oracle.hpp"
#include "cforge/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cforge;

namespace {

WeightedGraph triangle() {
  return WeightedGraph(3, {{0, 1, 2.0}, {1, 2, -5.0}, {0, 2, 1.0}});
}

WeightedGraph complete_graph(int n, double weight) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, weight});
  }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph random_graph(int n, std::uint64_t seed, double edge_prob = 0.6) {
  auto gen = rng::make_stream(seed, 67);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng::uniform_unit(gen) < edge_prob) {
        edges.push_back({u, v, rng::uniform_symmetric(gen, 1.0)});
      }
    }
  }
  return WeightedGraph(n, std::move(edges));
}

GcsqOptions exhaustive_opts() {
  GcsqOptions opts;
  opts.sampler = SamplerKind::kExhaustive;
  return opts;
}

// Sampler that only ever reports the all-zeros assignment, regardless of
// the QUBO; used to drive the no-feasible-sample paths.
class DegenerateSampler final : public Sampler {
 public:
  explicit DegenerateSampler(std::string name) : name_(std::move(name)) {}
  SampleSet sample(const Qubo& q) const override {
    const Assignment zeros(q.num_vars(), 0);
    return SampleSet(q.num_vars(), {{zeros, energy(q, zeros), 1}});
  }
  std::string name() const override { return name_; }

 private:
  std::string name_;
};

bool same_decision(const SplitDecision& a, const SplitDecision& b) {
  return a.accepted == b.accepted && a.side_a == b.side_a && a.side_b == b.side_b &&
         a.cut_value == b.cut_value && a.reason == b.reason;
}

// Re-applies the accepted trace decisions starting from the pre-split
// components and returns the resulting blocks sorted by smallest member.
CoalitionStructure replay_trace(const WeightedGraph& g, const GcsqResult& result,
                                bool decompose_sides) {
  std::vector<Coalition> blocks = connected_components(g, Coalition::full(g.node_count()));
  for (const auto& entry : result.trace) {
    if (!entry.decision.accepted) continue;
    const auto it = std::find(blocks.begin(), blocks.end(), entry.coalition);
    REQUIRE(it != blocks.end());
    blocks.erase(it);
    for (const Coalition* side : {&entry.decision.side_a, &entry.decision.side_b}) {
      if (decompose_sides) {
        for (auto& piece : connected_components(g, *side)) blocks.push_back(piece);
      } else {
        blocks.push_back(*side);
      }
    }
  }
  std::sort(blocks.begin(), blocks.end(), [](const Coalition& a, const Coalition& b) {
    return a.smallest() < b.smallest();
  });
  return CoalitionStructure{std::move(blocks)};
}

}  // namespace

TEST_SUITE("gcsq") {

TEST_CASE("select_split accepts an improving pair split") {
  const WeightedGraph g(2, {{0, 1, -3.0}});
  const auto [q, vars] = build_split_qubo(g, Coalition::full(2), true);
  const auto decision = select_split(exhaustive_sample(q), vars, Coalition::full(2), {});
  CHECK(decision.accepted);
  CHECK(decision.reason == SplitReason::kImproving);
  CHECK(decision.cut_value == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(decision.side_a == Coalition({0}));
  CHECK(decision.side_b == Coalition({1}));
}

TEST_CASE("select_split declines all-positive coalitions within the size bound") {
  const WeightedGraph g = complete_graph(4, 1.0);
  const auto [q, vars] = build_split_qubo(g, Coalition::full(4), true);
  GcsqOptions opts;
  opts.kmax = 4;
  const auto decision = select_split(exhaustive_sample(q), vars, Coalition::full(4), opts);
  CHECK_FALSE(decision.accepted);
  CHECK(decision.reason == SplitReason::kNone);
}

TEST_CASE("forced split of an all-positive path cuts the lightest edge") {
  const WeightedGraph g(
      6, {{0, 1, 3.0}, {1, 2, 1.0}, {2, 3, 5.0}, {3, 4, 4.0}, {4, 5, 2.0}});
  const auto [q, vars] = build_split_qubo(g, Coalition::full(6), true);
  GcsqOptions opts;
  opts.kmax = 5;
  const auto decision = select_split(exhaustive_sample(q), vars, Coalition::full(6), opts);
  CHECK(decision.accepted);
  CHECK(decision.reason == SplitReason::kForcedBySize);
  // Exhaustive check agrees: the cheapest proper cut severs edge (1,2).
  const auto oracle = oracles::min_proper_cut(6, g.edges(), {0, 1, 2, 3, 4, 5});
  CHECK(decision.cut_value == doctest::Approx(oracle.value).epsilon(1e-12));
  CHECK(decision.cut_value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(decision.side_a == Coalition({0, 1}));
  CHECK(decision.side_b == Coalition({2, 3, 4, 5}));
}

TEST_CASE("select_split most-frequent picks occurrences over energy") {
  const WeightedGraph g(3, {{0, 1, -1.0}, {1, 2, -2.0}, {0, 2, -3.0}});
  const auto [q, vars] = build_split_qubo(g, Coalition::full(3), true);
  // Hand-built set: the energy -4 split appears 10 times, a shallower -2
  // split 30 times.
  SampleSet set(2, {{{1, 0}, energy(q, {1, 0}), 30}, {{0, 1}, energy(q, {0, 1}), 10}});
  GcsqOptions opts;
  opts.selection = Selection::kMostFrequent;
  const auto by_count = select_split(set, vars, Coalition::full(3), opts);
  CHECK(by_count.accepted);
  CHECK(by_count.side_b == Coalition({1}));

  opts.selection = Selection::kLowestEnergy;
  const auto by_energy = select_split(set, vars, Coalition::full(3), opts);
  CHECK(by_energy.side_b == Coalition({2}));
  CHECK(by_energy.cut_value <= by_count.cut_value);
}

TEST_CASE("select_split ignores improper samples and validates its inputs") {
  const WeightedGraph g(2, {{0, 1, -3.0}});
  const auto [q, vars] = build_split_qubo(g, Coalition::full(2), true);

  // Only the no-split sample present: nothing to accept.
  SampleSet zeros(1, {{{0}, 0.0, 5}});
  const auto decision = select_split(zeros, vars, Coalition::full(2), {});
  CHECK_FALSE(decision.accepted);
  CHECK(decision.reason == SplitReason::kNone);

  // Same set under a forced split: no feasible sample.
  GcsqOptions forced;
  forced.kmax = 1;
  CHECK_THROWS_AS(select_split(zeros, vars, Coalition::full(2), forced),
                  NoFeasibleSampleError);

  // Mismatched coalition/set sizes are rejected.
  CHECK_THROWS_AS(select_split(zeros, vars, Coalition::full(3), {}),
                  std::invalid_argument);
}

TEST_CASE("triangle run matches the exact oracle") {
  const auto result = run_gcsq(triangle(), exhaustive_opts());
  REQUIRE(result.structure.coalitions.size() == 2);
  CHECK(result.structure.coalitions[0] == Coalition({0, 1}));
  CHECK(result.structure.coalitions[1] == Coalition({2}));
  CHECK(result.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(result.value ==
        doctest::Approx(exact_partition_oracle(triangle()).value).epsilon(1e-12));
}

TEST_CASE("non-negative weights keep connected components whole") {
  WeightedGraph g(7, {{0, 1, 1.0}, {1, 2, 0.5}, {0, 2, 0.0}, {3, 4, 2.0}, {4, 5, 1.5}});
  const auto result = run_gcsq(g, exhaustive_opts());
  REQUIRE(result.structure.coalitions.size() == 3);
  CHECK(result.structure.coalitions[0] == Coalition({0, 1, 2}));
  CHECK(result.structure.coalitions[1] == Coalition({3, 4, 5}));
  CHECK(result.structure.coalitions[2] == Coalition({6}));
  for (const auto& entry : result.trace) CHECK_FALSE(entry.decision.accepted);
}

TEST_CASE("K6 with unit weights under kmax=5 peels one node") {
  GcsqOptions opts = exhaustive_opts();
  opts.kmax = 5;
  const auto result = run_gcsq(complete_graph(6, 1.0), opts);
  CHECK(result.value == doctest::Approx(10.0).epsilon(1e-12));
  REQUIRE(result.structure.coalitions.size() == 2);
  for (const auto& c : result.structure.coalitions) CHECK(c.size() <= 5);
  bool saw_forced = false;
  for (const auto& entry : result.trace) {
    if (entry.decision.reason == SplitReason::kForcedBySize) saw_forced = true;
  }
  CHECK(saw_forced);
}

TEST_CASE("all-negative complete graph dissolves into singletons") {
  const auto result = run_gcsq(complete_graph(4, -1.0), exhaustive_opts());
  CHECK(result.structure.coalitions.size() == 4);
  CHECK(result.value == 0.0);
  for (const auto& c : result.structure.coalitions) CHECK(c.size() == 1);
}

TEST_CASE("kmax bounds every final coalition") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    GcsqOptions opts = exhaustive_opts();
    opts.kmax = 3;
    const auto g = random_graph(8, seed);
    const auto result = run_gcsq(g, opts);
    validate_partition(g, result.structure);
    for (const auto& c : result.structure.coalitions) CHECK(c.size() <= 3);
  }
}

TEST_CASE("value identity: initial components minus accepted cuts") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = random_graph(9, seed, 0.45);
    const auto result = run_gcsq(g, exhaustive_opts());
    validate_partition(g, result.structure);
    CHECK(result.value ==
          doctest::Approx(structure_value(g, result.structure)).epsilon(1e-12));

    double expected = 0.0;
    for (const auto& comp : connected_components(g, Coalition::full(9))) {
      expected += coalition_value(g, comp);
    }
    for (const auto& entry : result.trace) {
      if (entry.decision.accepted) expected -= entry.decision.cut_value;
    }
    CHECK(result.value == doctest::Approx(expected).epsilon(1e-9));

    // Improving splits must strictly improve.
    for (const auto& entry : result.trace) {
      if (entry.decision.reason == SplitReason::kImproving) {
        CHECK(entry.decision.cut_value < 0.0);
      }
    }
  }
}

TEST_CASE("replaying the trace reproduces the structure") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto g = random_graph(8, seed, 0.5);
    for (const bool decompose : {true, false}) {
      GcsqOptions opts = exhaustive_opts();
      opts.decompose_sides = decompose;
      const auto result = run_gcsq(g, opts);
      CHECK(replay_trace(g, result, decompose) == result.structure);
      for (const auto& entry : result.trace) {
        CHECK(entry.coalition.size() >= 2);
        CHECK(entry.qubo_vars == entry.coalition.size() - 1);
        CHECK(entry.sampler_seconds >= 0.0);
        if (entry.decision.accepted) {
          CHECK_FALSE(entry.decision.side_a.empty());
          CHECK_FALSE(entry.decision.side_b.empty());
          CHECK(entry.decision.side_a.size() + entry.decision.side_b.size() ==
                entry.coalition.size());
        }
      }
    }
  }
}

TEST_CASE("decompose_sides splits disconnected sides, off leaves them whole") {
  // Path 0-1-2 with repulsive edges: the best split isolates node 1, leaving
  // side {0,2} with no internal edge.
  const WeightedGraph g(3, {{0, 1, -1.0}, {1, 2, -1.0}});
  GcsqOptions opts = exhaustive_opts();
  const auto split = run_gcsq(g, opts);
  CHECK(split.structure.coalitions.size() == 3);

  opts.decompose_sides = false;
  const auto whole = run_gcsq(g, opts);
  REQUIRE(whole.structure.coalitions.size() == 2);
  CHECK(whole.structure.coalitions[0] == Coalition({0, 2}));
  CHECK(whole.structure.coalitions[1] == Coalition({1}));
  CHECK(split.value == whole.value);  // both score zero here
}

TEST_CASE("anneal runs are deterministic in options") {
  const auto g = random_graph(12, 77, 0.5);
  GcsqOptions opts;
  opts.sampler = SamplerKind::kAnneal;
  opts.anneal.num_reads = 50;
  opts.anneal.sweeps_per_read = 80;
  opts.anneal.seed = 9;
  const auto a = run_gcsq(g, opts);
  const auto b = run_gcsq(g, opts);
  CHECK(a.structure == b.structure);
  CHECK(a.value == b.value);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].coalition == b.trace[i].coalition);
    CHECK(same_decision(a.trace[i].decision, b.trace[i].decision));
    CHECK(a.trace[i].qubo_vars == b.trace[i].qubo_vars);
  }
}

TEST_CASE("degenerate sampler triggers the exhaustive fallback when forced") {
  // kmax forces a split of K3, but the sampler only ever returns all-zeros;
  // the runner must recover via exhaustive enumeration.
  const auto g = complete_graph(3, 1.0);
  GcsqOptions opts;
  opts.kmax = 2;
  const DegenerateSampler lazy("degenerate");
  const auto result = run_gcsq(g, opts, lazy);
  validate_partition(g, result.structure);
  for (const auto& c : result.structure.coalitions) CHECK(c.size() <= 2);

  // A sampler claiming to be exhaustive gets no second chance.
  const DegenerateSampler fake("exhaustive");
  CHECK_THROWS_AS(run_gcsq(g, opts, fake), NoFeasibleSampleError);
}

TEST_CASE("single node and argument guards") {
  const auto lone = run_gcsq(WeightedGraph(1, {}), exhaustive_opts());
  REQUIRE(lone.structure.coalitions.size() == 1);
  CHECK(lone.structure.coalitions[0] == Coalition({0}));
  CHECK(lone.trace.empty());
  CHECK(lone.value == 0.0);

  CHECK_THROWS_AS(run_gcsq(WeightedGraph(0, {}), exhaustive_opts()),
                  std::invalid_argument);
  GcsqOptions bad = exhaustive_opts();
  bad.kmax = 0;
  CHECK_THROWS_AS(run_gcsq(triangle(), bad), std::invalid_argument);
}

TEST_CASE("never beats the exact oracle on small graphs") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    const auto g = random_graph(n, seed);
    const auto result = run_gcsq(g, exhaustive_opts());
    const auto oracle = exact_partition_oracle(g);
    CHECK(result.value <= oracle.value + 1e-9);
  }
}

}  // TEST_SUITE
