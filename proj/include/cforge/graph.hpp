#pragma once

#include <utility>
#include <vector>

namespace cforge {

using NodeId = int;

// One undirected weighted edge; weights may be negative.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 0.0;
};

// Simple undirected weighted graph with immutable structure. Construction
// rejects self-loops, duplicate edges, out-of-range endpoints and non-finite
// weights; edges are canonicalized to u < v and sorted.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int node_count, std::vector<Edge> edges);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Neighbors of u as (neighbor, weight), ascending by neighbor id.
  const std::vector<std::pair<NodeId, double>>& neighbors(NodeId u) const;

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<NodeId, double>>> adjacency_;
};

// A set of node ids, stored sorted ascending. Default-constructed coalitions
// are empty; partition validation rejects empty blocks.
class Coalition {
 public:
  Coalition() = default;
  explicit Coalition(std::vector<NodeId> members);

  static Coalition full(int node_count);  // {0, 1, ..., node_count-1}

  const std::vector<NodeId>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(NodeId node) const;
  NodeId smallest() const;  // throws std::out_of_range when empty

  friend bool operator==(const Coalition& a, const Coalition& b) {
    return a.members_ == b.members_;
  }

 private:
  std::vector<NodeId> members_;
};

// A coalition structure: intended to be a partition of the graph's nodes.
struct CoalitionStructure {
  std::vector<Coalition> coalitions;

  friend bool operator==(const CoalitionStructure& a, const CoalitionStructure& b) {
    return a.coalitions == b.coalitions;
  }
};

// Throws std::invalid_argument unless the coalitions are non-empty, disjoint
// and cover every node of g exactly once.
void validate_partition(const WeightedGraph& g, const CoalitionStructure& p);

// Sum of weights of edges with both endpoints inside c.
double coalition_value(const WeightedGraph& g, const Coalition& c);

// Sum of coalition_value over all blocks; validates that p partitions g.
double structure_value(const WeightedGraph& g, const CoalitionStructure& p);

// Sum of weights of edges internal to c crossing between side and c\side.
// side must be a subset of c; an empty (or full) side has cut weight 0.
double cut_weight(const WeightedGraph& g, const Coalition& c, const Coalition& side);

// Connected components of the subgraph induced by c, each sorted, ordered
// by smallest member.
std::vector<Coalition> connected_components(const WeightedGraph& g, const Coalition& c);

// Subgraph induced by c with nodes relabeled 0..|c|-1 in ascending member
// order; to_original maps new ids back.
struct InducedSubgraph {
  WeightedGraph graph;
  std::vector<NodeId> to_original;
};
InducedSubgraph induced_subgraph(const WeightedGraph& g, const Coalition& c);

}  // namespace cforge
