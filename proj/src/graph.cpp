#include "cforge/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cforge {

namespace {

void check_member_range(const WeightedGraph& g, const Coalition& c) {
  if (!c.empty() && (c.smallest() < 0 || c.members().back() >= g.node_count())) {
    throw std::out_of_range("coalition member out of graph range");
  }
}

}  // namespace

WeightedGraph::WeightedGraph(int node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ < 0) throw std::invalid_argument("negative node count");
  for (auto& e : edges_) {
    if (e.u < 0 || e.u >= node_count_ || e.v < 0 || e.v >= node_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
    }
    if (!std::isfinite(e.weight)) {
      throw std::invalid_argument("non-finite edge weight");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
      throw std::invalid_argument("duplicate edge " + std::to_string(edges_[i].u) +
                                  "-" + std::to_string(edges_[i].v));
    }
  }
  adjacency_.resize(node_count_);
  for (const auto& e : edges_) {
    adjacency_[e.u].emplace_back(e.v, e.weight);
    adjacency_[e.v].emplace_back(e.u, e.weight);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

const std::vector<std::pair<NodeId, double>>& WeightedGraph::neighbors(NodeId u) const {
  if (u < 0 || u >= node_count_) throw std::out_of_range("node id out of range");
  return adjacency_[u];
}

Coalition::Coalition(std::vector<NodeId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("duplicate coalition member");
  }
}

Coalition Coalition::full(int node_count) {
  std::vector<NodeId> all(node_count);
  for (int i = 0; i < node_count; ++i) all[i] = i;
  return Coalition(std::move(all));
}

bool Coalition::contains(NodeId node) const {
  return std::binary_search(members_.begin(), members_.end(), node);
}

NodeId Coalition::smallest() const {
  if (members_.empty()) throw std::out_of_range("empty coalition has no members");
  return members_.front();
}

void validate_partition(const WeightedGraph& g, const CoalitionStructure& p) {
  std::vector<char> seen(g.node_count(), 0);
  int covered = 0;
  for (const auto& c : p.coalitions) {
    if (c.empty()) throw std::invalid_argument("partition contains an empty coalition");
    check_member_range(g, c);
    for (NodeId m : c.members()) {
      if (seen[m]) {
        throw std::invalid_argument("node " + std::to_string(m) +
                                    " appears in two coalitions");
      }
      seen[m] = 1;
      ++covered;
    }
  }
  if (covered != g.node_count()) {
    throw std::invalid_argument("partition does not cover every node");
  }
}

double coalition_value(const WeightedGraph& g, const Coalition& c) {
  check_member_range(g, c);
  std::vector<char> in(g.node_count(), 0);
  for (NodeId m : c.members()) in[m] = 1;
  double total = 0.0;
  for (NodeId u : c.members()) {
    for (const auto& [v, w] : g.neighbors(u)) {
      if (u < v && in[v]) total += w;
    }
  }
  return total;
}

double structure_value(const WeightedGraph& g, const CoalitionStructure& p) {
  validate_partition(g, p);
  double total = 0.0;
  for (const auto& c : p.coalitions) total += coalition_value(g, c);
  return total;
}

double cut_weight(const WeightedGraph& g, const Coalition& c, const Coalition& side) {
  check_member_range(g, c);
  std::vector<char> in_c(g.node_count(), 0);
  for (NodeId m : c.members()) in_c[m] = 1;
  std::vector<char> in_side(g.node_count(), 0);
  for (NodeId m : side.members()) {
    if (m < 0 || m >= g.node_count() || !in_c[m]) {
      throw std::invalid_argument("side is not a subset of the coalition");
    }
    in_side[m] = 1;
  }
  double total = 0.0;
  for (NodeId u : c.members()) {
    for (const auto& [v, w] : g.neighbors(u)) {
      if (u < v && in_c[v] && in_side[u] != in_side[v]) total += w;
    }
  }
  return total;
}

std::vector<Coalition> connected_components(const WeightedGraph& g, const Coalition& c) {
  check_member_range(g, c);
  std::vector<char> in(g.node_count(), 0);
  for (NodeId m : c.members()) in[m] = 1;
  std::vector<char> visited(g.node_count(), 0);
  std::vector<Coalition> components;
  std::vector<NodeId> stack;
  for (NodeId seed : c.members()) {
    if (visited[seed]) continue;
    std::vector<NodeId> component;
    stack.push_back(seed);
    visited[seed] = 1;
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      component.push_back(u);
      for (const auto& [v, w] : g.neighbors(u)) {
        (void)w;
        if (in[v] && !visited[v]) {
          visited[v] = 1;
          stack.push_back(v);
        }
      }
    }
    components.emplace_back(std::move(component));
  }
  return components;
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, const Coalition& c) {
  check_member_range(g, c);
  std::vector<NodeId> to_new(g.node_count(), -1);
  const auto& members = c.members();
  for (int i = 0; i < c.size(); ++i) to_new[members[i]] = i;
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (to_new[e.u] >= 0 && to_new[e.v] >= 0) {
      edges.push_back({to_new[e.u], to_new[e.v], e.weight});
    }
  }
  return {WeightedGraph(c.size(), std::move(edges)), members};
}

}  // namespace cforge
