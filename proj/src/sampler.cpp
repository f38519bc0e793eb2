#include "cforge/sampler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "cforge/errors.hpp"
#include "cforge/parallel.hpp"
#include "cforge/rng.hpp"

namespace cforge {

namespace {

bool sample_order(const Sample& a, const Sample& b) {
  if (a.energy != b.energy) return a.energy < b.energy;
  return a.assignment < b.assignment;
}

// Dense view of a QUBO for hot loops: linear fields need the diagonal and
// the off-diagonal neighbors of each variable.
struct DenseQubo {
  std::vector<double> diag;
  std::vector<std::vector<std::pair<int, double>>> adjacency;

  explicit DenseQubo(const Qubo& q)
      : diag(q.num_vars(), 0.0), adjacency(q.num_vars()) {
    for (const auto& [key, coeff] : q.terms()) {
      const auto [i, j] = key;
      if (i == j) {
        diag[i] += coeff;
      } else {
        adjacency[i].emplace_back(j, coeff);
        adjacency[j].emplace_back(i, coeff);
      }
    }
  }

  // Local field h_i = diag_i + sum_j coeff(i,j) * x_j (j != i); flipping
  // x_i changes the energy by +h_i (0 -> 1) or -h_i (1 -> 0).
  double field(int i, const Assignment& x) const {
    double h = diag[i];
    for (const auto& [j, c] : adjacency[i]) {
      if (x[j]) h += c;
    }
    return h;
  }
};

}  // namespace

SampleSet::SampleSet(int num_vars, std::vector<Sample> samples)
    : num_vars_(num_vars), samples_(std::move(samples)) {
  for (const auto& s : samples_) {
    if (static_cast<int>(s.assignment.size()) != num_vars_) {
      throw std::invalid_argument("sample length does not match variable count");
    }
    if (s.occurrences == 0) throw std::invalid_argument("sample with zero occurrences");
  }
  // Exhaustive enumeration already emits sorted unique samples; skip the
  // costly general path when the invariant is already established.
  const bool sorted_unique =
      std::is_sorted(samples_.begin(), samples_.end(), sample_order) &&
      std::adjacent_find(samples_.begin(), samples_.end(),
                         [](const Sample& a, const Sample& b) {
                           return a.assignment == b.assignment;
                         }) == samples_.end();
  if (sorted_unique) return;

  std::sort(samples_.begin(), samples_.end(), sample_order);
  // Identical assignments have identical energies, so they are adjacent now.
  std::vector<Sample> merged;
  merged.reserve(samples_.size());
  for (auto& s : samples_) {
    if (!merged.empty() && merged.back().assignment == s.assignment) {
      merged.back().occurrences += s.occurrences;
    } else {
      merged.push_back(std::move(s));
    }
  }
  samples_ = std::move(merged);
}

std::uint64_t SampleSet::total_occurrences() const {
  std::uint64_t total = 0;
  for (const auto& s : samples_) total += s.occurrences;
  return total;
}

const Sample& SampleSet::lowest() const {
  if (samples_.empty()) throw std::out_of_range("empty sample set");
  return samples_.front();
}

void AnnealParams::validate() const {
  if (num_reads < 1) throw std::invalid_argument("num_reads must be >= 1");
  if (sweeps_per_read < 1) throw std::invalid_argument("sweeps_per_read must be >= 1");
  if (!(beta_start > 0.0) || !std::isfinite(beta_start)) {
    throw std::invalid_argument("beta_start must be positive and finite");
  }
  if (!(beta_end > beta_start) || !std::isfinite(beta_end)) {
    throw std::invalid_argument("beta_end must exceed beta_start");
  }
}

SampleSet exhaustive_sample(const Qubo& q) {
  const int nv = q.num_vars();
  if (nv > kExhaustiveVarCap) {
    throw TooLargeError("exhaustive enumeration capped at " +
                        std::to_string(kExhaustiveVarCap) + " variables, got " +
                        std::to_string(nv));
  }
  if (nv == 0) {
    return SampleSet(0, {Sample{{}, q.offset(), 1}});
  }

  const DenseQubo dense(q);
  const std::uint64_t total = std::uint64_t{1} << nv;
  constexpr std::uint64_t kReanchorInterval = 4096;

  // Walk assignments in Gray-code order so each step flips one variable.
  // Entries pack the assignment with variable 0 in the top bit, making the
  // numeric tie-break identical to lexicographic assignment order.
  std::vector<std::pair<double, std::uint32_t>> entries;
  entries.reserve(total);
  Assignment x(nv, 0);
  double e = q.offset();
  std::uint32_t packed = 0;
  entries.emplace_back(e, packed);
  for (std::uint64_t t = 1; t < total; ++t) {
    const int bit = std::countr_zero(t);
    const double h = dense.field(bit, x);
    e += x[bit] ? -h : h;
    x[bit] ^= 1;
    packed ^= std::uint32_t{1} << (nv - 1 - bit);
    if ((t & (kReanchorInterval - 1)) == 0) e = energy(q, x);
    entries.emplace_back(e, packed);
  }
  std::sort(entries.begin(), entries.end());

  std::vector<Sample> samples;
  samples.reserve(total);
  for (const auto& [en, bits] : entries) {
    Sample s;
    s.energy = en;
    s.assignment.resize(nv);
    for (int i = 0; i < nv; ++i) {
      s.assignment[i] = static_cast<std::uint8_t>((bits >> (nv - 1 - i)) & 1u);
    }
    samples.push_back(std::move(s));
  }
  return SampleSet(nv, std::move(samples));
}

SampleSet anneal_sample(const Qubo& q, const AnnealParams& params) {
  params.validate();
  const int nv = q.num_vars();
  if (nv < 1) throw std::invalid_argument("annealer needs at least one variable");

  const DenseQubo dense(q);
  const int sweeps = params.sweeps_per_read;
  const double ratio = params.beta_end / params.beta_start;

  std::vector<Assignment> finals(params.num_reads);
  parallel_for(params.num_reads, [&](std::int64_t read) {
    auto gen = rng::make_stream(params.seed, static_cast<std::uint64_t>(read));
    Assignment x(nv);
    for (int i = 0; i < nv; ++i) x[i] = static_cast<std::uint8_t>(gen() & 1u);
    // Maintain all local fields incrementally: O(1) per rejected proposal,
    // O(degree) per accepted flip.
    std::vector<double> h(nv);
    for (int i = 0; i < nv; ++i) h[i] = dense.field(i, x);

    for (int sweep = 0; sweep < sweeps; ++sweep) {
      const double expo = sweeps == 1 ? 1.0 : static_cast<double>(sweep) / (sweeps - 1);
      const double beta = params.beta_start * std::pow(ratio, expo);
      for (int i = 0; i < nv; ++i) {
        const double delta = x[i] ? -h[i] : h[i];
        if (delta <= 0.0 || rng::uniform_unit(gen) < std::exp(-beta * delta)) {
          x[i] ^= 1;
          const double sign = x[i] ? 1.0 : -1.0;
          for (const auto& [j, c] : dense.adjacency[i]) h[j] += sign * c;
        }
      }
    }
    finals[read] = std::move(x);
  });

  std::vector<Sample> samples;
  samples.reserve(finals.size());
  for (auto& x : finals) {
    Sample s;
    s.energy = energy(q, x);
    s.assignment = std::move(x);
    samples.push_back(std::move(s));
  }
  return SampleSet(nv, std::move(samples));
}

const Sample& most_frequent_sample(const SampleSet& set) {
  if (set.empty()) throw std::out_of_range("empty sample set");
  const Sample* best = &set.samples().front();
  for (const auto& s : set.samples()) {
    if (s.occurrences > best->occurrences) best = &s;
  }
  return *best;
}

}  // namespace cforge
