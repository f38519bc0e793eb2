#include "cforge/partition_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "cforge/errors.hpp"

namespace cforge {

OracleResult exact_partition_oracle(const WeightedGraph& g, std::optional<int> kmax) {
  const int n = g.node_count();
  if (n < 1) throw std::invalid_argument("oracle needs at least one node");
  if (n > kOracleNodeCap) {
    throw TooLargeError("exact partition oracle capped at " +
                        std::to_string(kOracleNodeCap) + " nodes, got " +
                        std::to_string(n));
  }
  if (kmax && *kmax < 1) throw std::invalid_argument("kmax must be >= 1");

  // Enumerate restricted growth strings: labels[0] = 0 and
  // labels[i] <= max(labels[0..i-1]) + 1, in lexicographic order.
  std::vector<int> labels(n, 0);
  std::vector<int> prefix_max(n, 0);
  std::vector<int> block_sizes(n);

  bool have_best = false;
  double best_value = 0.0;
  std::vector<int> best_labels;

  const auto& edges = g.edges();
  for (;;) {
    bool feasible = true;
    if (kmax) {
      std::fill(block_sizes.begin(), block_sizes.begin() + n, 0);
      for (int i = 0; i < n; ++i) {
        if (++block_sizes[labels[i]] > *kmax) {
          feasible = false;
          break;
        }
      }
    }
    if (feasible) {
      double value = 0.0;
      for (const auto& e : edges) {
        if (labels[e.u] == labels[e.v]) value += e.weight;
      }
      if (!have_best || value > best_value) {
        have_best = true;
        best_value = value;
        best_labels = labels;
      }
    }

    // Advance to the next restricted growth string.
    int i = n - 1;
    while (i > 0 && labels[i] > prefix_max[i - 1]) --i;
    if (i == 0) break;
    ++labels[i];
    prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
    for (int j = i + 1; j < n; ++j) {
      labels[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }

  // kmax >= 1 always admits the all-singletons partition, so a best exists.
  const int block_count = *std::max_element(best_labels.begin(), best_labels.end()) + 1;
  std::vector<std::vector<NodeId>> blocks(block_count);
  for (int i = 0; i < n; ++i) blocks[best_labels[i]].push_back(i);
  OracleResult result;
  result.value = best_value;
  for (auto& b : blocks) result.structure.coalitions.emplace_back(std::move(b));
  return result;
}

}  // namespace cforge
