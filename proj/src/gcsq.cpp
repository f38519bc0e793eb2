#include "cforge/gcsq.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "cforge/errors.hpp"

namespace cforge {

namespace {

std::string describe(const Coalition& c) {
  std::ostringstream out;
  out << "{";
  const auto& m = c.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out << ",";
    if (i == 12 && m.size() > 13) {
      out << "...+" << (m.size() - i) << " more";
      break;
    }
    out << m[i];
  }
  out << "}";
  return out.str();
}

// Worklist order: largest coalition first, ties by smallest member. Live
// entries are disjoint, so this is a total order.
struct WorklistOrder {
  bool operator()(const Coalition& a, const Coalition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.smallest() > b.smallest();
  }
};

const Sample* pick_candidate(const SampleSet& set, const VarMap& vars,
                             Selection selection) {
  const Sample* best = nullptr;
  for (const auto& s : set.samples()) {
    bool has_one = false;
    bool has_zero = vars.fixed_node.has_value();  // pinned member is side 0
    for (const auto bit : s.assignment) {
      if (bit) {
        has_one = true;
      } else {
        has_zero = true;
      }
      if (has_one && has_zero) break;
    }
    if (!(has_one && has_zero)) continue;  // improper: one side empty
    if (selection == Selection::kLowestEnergy) return &s;  // set is sorted
    if (best == nullptr || s.occurrences > best->occurrences) best = &s;
  }
  return best;
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

SplitDecision select_split(const SampleSet& set, const VarMap& vars,
                           const Coalition& c, const GcsqOptions& opts) {
  const int expected = c.size() - (vars.fixed_node ? 1 : 0);
  if (static_cast<int>(vars.var_to_node.size()) != expected ||
      set.num_vars() != expected) {
    throw std::invalid_argument("sample set does not match the coalition");
  }
  const bool forced = opts.kmax && c.size() > *opts.kmax;

  SplitDecision decision;
  const Sample* candidate = pick_candidate(set, vars, opts.selection);
  if (candidate == nullptr) {
    if (forced) {
      throw NoFeasibleSampleError("forced split of coalition " + describe(c) +
                                  " found no proper bipartition among " +
                                  std::to_string(set.size()) + " samples");
    }
    return decision;
  }

  decision.cut_value = candidate->energy;
  if (forced || candidate->energy < 0.0) {
    std::vector<NodeId> side_b;
    for (std::size_t i = 0; i < candidate->assignment.size(); ++i) {
      if (candidate->assignment[i]) side_b.push_back(vars.var_to_node[i]);
    }
    std::vector<NodeId> side_a;
    Coalition b{std::vector<NodeId>(side_b)};
    for (NodeId m : c.members()) {
      if (!b.contains(m)) side_a.push_back(m);
    }
    decision.accepted = true;
    decision.side_a = Coalition(std::move(side_a));
    decision.side_b = std::move(b);
    decision.reason = forced ? SplitReason::kForcedBySize : SplitReason::kImproving;
  }
  return decision;
}

GcsqResult run_gcsq(const WeightedGraph& g, const GcsqOptions& opts) {
  std::unique_ptr<Sampler> sampler;
  if (opts.sampler == SamplerKind::kExhaustive) {
    sampler = std::make_unique<ExhaustiveSampler>();
  } else {
    sampler = std::make_unique<AnnealSampler>(opts.anneal);
  }
  return run_gcsq(g, opts, *sampler);
}

GcsqResult run_gcsq(const WeightedGraph& g, const GcsqOptions& opts,
                    const Sampler& sampler) {
  if (g.node_count() < 1) throw std::invalid_argument("empty graph");
  if (opts.kmax && *opts.kmax < 1) throw std::invalid_argument("kmax must be >= 1");

  GcsqResult result;
  std::vector<Coalition> final_blocks;
  std::priority_queue<Coalition, std::vector<Coalition>, WorklistOrder> open;

  auto emit = [&](Coalition c) {
    if (c.size() == 1) {
      final_blocks.push_back(std::move(c));
    } else {
      open.push(std::move(c));
    }
  };
  // The grand coalition starts pre-split into connected components.
  for (auto& component : connected_components(g, Coalition::full(g.node_count()))) {
    emit(std::move(component));
  }

  while (!open.empty()) {
    const Coalition c = open.top();
    open.pop();

    auto [qubo, vars] = build_split_qubo(g, c, /*fix_symmetry=*/true);
    const auto start = std::chrono::steady_clock::now();
    SampleSet set = sampler.sample(qubo);
    double seconds = elapsed_seconds(start);

    SplitDecision decision;
    try {
      decision = select_split(set, vars, c, opts);
    } catch (const NoFeasibleSampleError&) {
      // Forced split with no proper sample: fall back to exact enumeration
      // before giving up.
      if (sampler.name() == "exhaustive" || qubo.num_vars() > kExhaustiveVarCap) {
        throw;
      }
      const auto retry_start = std::chrono::steady_clock::now();
      set = exhaustive_sample(qubo);
      seconds += elapsed_seconds(retry_start);
      decision = select_split(set, vars, c, opts);
    }

    result.trace.push_back({c, decision, qubo.num_vars(), seconds});
    if (decision.accepted) {
      for (const Coalition* side : {&decision.side_a, &decision.side_b}) {
        if (opts.decompose_sides) {
          for (auto& piece : connected_components(g, *side)) emit(std::move(piece));
        } else {
          emit(*side);
        }
      }
    } else {
      final_blocks.push_back(c);
    }
  }

  std::sort(final_blocks.begin(), final_blocks.end(),
            [](const Coalition& a, const Coalition& b) {
              return a.smallest() < b.smallest();
            });
  result.structure.coalitions = std::move(final_blocks);
  result.value = structure_value(g, result.structure);
  return result;
}

}  // namespace cforge
