#pragma once

#include <optional>
#include <vector>

#include "cforge/graph.hpp"
#include "cforge/qubo.hpp"
#include "cforge/sampler.hpp"

namespace cforge {

// How the split step picks its candidate bipartition from a sample set.
enum class Selection { kLowestEnergy, kMostFrequent };

enum class SamplerKind { kAnneal, kExhaustive };

struct GcsqOptions {
  std::optional<int> kmax;  // maximum coalition size; unset = unbounded
  Selection selection = Selection::kLowestEnergy;
  bool decompose_sides = true;  // split accepted sides into components
  SamplerKind sampler = SamplerKind::kAnneal;
  AnnealParams anneal;
};

enum class SplitReason { kNone, kImproving, kForcedBySize };

struct SplitDecision {
  bool accepted = false;
  Coalition side_a;  // contains the pinned (smallest) member when accepted
  Coalition side_b;
  double cut_value = 0.0;
  SplitReason reason = SplitReason::kNone;
};

struct TraceEntry {
  Coalition coalition;
  SplitDecision decision;
  int qubo_vars = 0;
  double sampler_seconds = 0.0;
};

struct GcsqResult {
  CoalitionStructure structure;
  std::vector<TraceEntry> trace;
  double value = 0.0;
};

// Decodes the sample set of build_split_qubo(g, c) and decides the split:
//  - candidates are proper samples (both sides non-empty), picked per
//    opts.selection (lowest energy, or most frequent with ties resolved by
//    sample-set order);
//  - within the size bound, the candidate is accepted only when its cut
//    value is strictly negative (splitting strictly raises the structure
//    value);
//  - when |c| exceeds opts.kmax the split is forced: the candidate is
//    accepted regardless of sign, and NoFeasibleSampleError is thrown if no
//    proper sample exists.
SplitDecision select_split(const SampleSet& set, const VarMap& vars,
                           const Coalition& c, const GcsqOptions& opts);

// Top-down coalition structure generation: start from the grand coalition
// (pre-split into connected components), repeatedly solve the bipartition
// QUBO of the largest open coalition and apply select_split until no
// coalition changes. Deterministic for fixed (graph, options).
GcsqResult run_gcsq(const WeightedGraph& g, const GcsqOptions& opts);

// Same, but with a caller-supplied solve strategy.
GcsqResult run_gcsq(const WeightedGraph& g, const GcsqOptions& opts,
                    const Sampler& sampler);

}  // namespace cforge
