#pragma once

#include <optional>

#include "cforge/graph.hpp"

namespace cforge {

inline constexpr int kOracleNodeCap = 12;

struct OracleResult {
  CoalitionStructure structure;
  double value = 0.0;
};

// Exhaustively maximizes structure_value over every partition of g's nodes
// (restricted-growth-string enumeration, lexicographic order). Partitions
// containing a block larger than kmax are skipped when kmax is given.
// Ties keep the first maximizer in enumeration order; improvement is strict.
// Throws TooLargeError past kOracleNodeCap nodes and std::invalid_argument
// for kmax < 1 or an empty graph.
OracleResult exact_partition_oracle(const WeightedGraph& g,
                                    std::optional<int> kmax = std::nullopt);

}  // namespace cforge
