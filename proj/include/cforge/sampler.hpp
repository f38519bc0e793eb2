#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cforge/qubo.hpp"

namespace cforge {

struct Sample {
  Assignment assignment;
  double energy = 0.0;
  std::uint64_t occurrences = 1;

  friend bool operator==(const Sample& a, const Sample& b) {
    return a.assignment == b.assignment && a.energy == b.energy &&
           a.occurrences == b.occurrences;
  }
};

// Aggregated sampler output: unique assignments with occurrence counts,
// sorted ascending by energy, ties broken by lexicographic assignment order.
class SampleSet {
 public:
  SampleSet() = default;
  // Aggregates duplicate assignments and establishes the sort order.
  SampleSet(int num_vars, std::vector<Sample> samples);

  int num_vars() const { return num_vars_; }
  const std::vector<Sample>& samples() const { return samples_; }
  bool empty() const { return samples_.empty(); }
  std::size_t size() const { return samples_.size(); }
  std::uint64_t total_occurrences() const;

  // Lowest-energy sample; throws std::out_of_range when empty.
  const Sample& lowest() const;

 private:
  int num_vars_ = 0;
  std::vector<Sample> samples_;
};

struct AnnealParams {
  int num_reads = 1000;
  int sweeps_per_read = 1000;
  double beta_start = 0.1;
  double beta_end = 10.0;
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

inline constexpr int kExhaustiveVarCap = 24;

// Enumerates every assignment (num_vars <= kExhaustiveVarCap, else
// TooLargeError) via a Gray-code walk with incremental energy updates,
// re-anchored periodically against full evaluation to bound drift.
SampleSet exhaustive_sample(const Qubo& q);

// Independent simulated-annealing restarts (one per read) of sequential
// single-flip Metropolis sweeps under a geometric inverse-temperature
// schedule from beta_start to beta_end. Each read r uses its own RNG stream
// derived from (seed, r), so results are identical for any thread count.
SampleSet anneal_sample(const Qubo& q, const AnnealParams& params);

// Sample with the highest occurrence count; ties resolve to the earliest in
// sample-set order (lowest energy, then lexicographic).
const Sample& most_frequent_sample(const SampleSet& set);

// Polymorphic handle so callers can swap solve strategies.
class Sampler {
 public:
  virtual ~Sampler() = default;
  virtual SampleSet sample(const Qubo& q) const = 0;
  virtual std::string name() const = 0;
};

class ExhaustiveSampler final : public Sampler {
 public:
  SampleSet sample(const Qubo& q) const override { return exhaustive_sample(q); }
  std::string name() const override { return "exhaustive"; }
};

class AnnealSampler final : public Sampler {
 public:
  explicit AnnealSampler(AnnealParams params = {}) : params_(params) {}
  SampleSet sample(const Qubo& q) const override { return anneal_sample(q, params_); }
  std::string name() const override { return "anneal"; }
  const AnnealParams& params() const { return params_; }

 private:
  AnnealParams params_;
};

}  // namespace cforge
