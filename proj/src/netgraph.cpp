#include "cforge/netgraph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "cforge/rng.hpp"

namespace cforge {

namespace {

void check_model_mode(const WeightModel& model, WeightMode expected) {
  if (model.mode != expected) {
    throw std::invalid_argument("weight model mode does not match the weight function");
  }
  if (!(model.noise_amplitude >= 0.0)) {
    throw std::invalid_argument("noise amplitude must be >= 0");
  }
}

}  // namespace

double composite_weight(double latency, double reliability, double management,
                        double bandwidth, const WeightModel& model) {
  check_model_mode(model, WeightMode::kComposite);
  for (double v : {latency, reliability, management, bandwidth}) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("non-finite link quality input");
    }
  }
  return model.alpha * latency + model.beta * reliability +
         model.gamma * management + model.delta * bandwidth;
}

std::optional<double> starlink_weight(NodeId u, NodeId v, double distance_km,
                                      double radius_km, const WeightModel& model) {
  check_model_mode(model, WeightMode::kStarlink);
  if (!(radius_km > 0.0) || !std::isfinite(radius_km)) {
    throw std::invalid_argument("radius must be positive");
  }
  if (!(distance_km > 0.0) || !std::isfinite(distance_km)) {
    throw std::invalid_argument("link distance must be positive");
  }
  if (u == v || u < 0 || v < 0) throw std::invalid_argument("invalid link endpoints");
  if (distance_km > radius_km) return std::nullopt;

  const auto lo = static_cast<std::uint64_t>(std::min(u, v));
  const auto hi = static_cast<std::uint64_t>(std::max(u, v));
  auto gen = rng::make_stream(model.seed, (lo << 32) | hi);
  const double noise = rng::uniform_symmetric(gen, model.noise_amplitude);
  return 1.0 - distance_km / radius_km + noise;
}

WeightedGraph build_geometric_graph(const std::vector<StateVector>& states,
                                    double radius_km, const WeightModel& model) {
  if (states.empty()) throw std::invalid_argument("no satellite states");
  if (!(radius_km > 0.0) || !std::isfinite(radius_km)) {
    throw std::invalid_argument("radius must be positive");
  }
  const Eigen::MatrixXd dist = pairwise_distances(states);
  const int n = static_cast<int>(states.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double d = dist(u, v);
      if (d > radius_km) continue;
      double w = 0.0;
      if (model.mode == WeightMode::kStarlink) {
        const auto sw = starlink_weight(u, v, d, radius_km, model);
        if (!sw) continue;
        w = *sw;
      } else {
        const double latency = model.latency ? model.latency(d) : d / kSpeedOfLightKmS;
        const double reliability = model.reliability ? model.reliability(d) : 1.0;
        const double management = model.management ? model.management(d) : 1.0;
        const double bandwidth = model.bandwidth ? model.bandwidth(d) : 1.0;
        w = composite_weight(latency, reliability, management, bandwidth, model);
      }
      edges.push_back({u, v, w});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

std::int64_t synthetic_edge_count(int n, double sparsity) {
  if (n < 2) throw std::invalid_argument("synthetic graphs need n >= 2");
  if (!(sparsity >= 0.0 && sparsity <= 1.0)) {
    throw std::invalid_argument("sparsity must lie in [0, 1]");
  }
  const std::int64_t complete = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::int64_t tree = n - 1;
  return tree + std::llround((1.0 - sparsity) * static_cast<double>(complete - tree));
}

WeightedGraph generate_synthetic_graph(int n, double sparsity, std::uint64_t seed) {
  const std::int64_t target = synthetic_edge_count(n, sparsity);
  auto gen = rng::make_stream(seed, 0);

  // Uniform spanning tree from a random Pruefer sequence.
  std::vector<std::pair<int, int>> tree;
  tree.reserve(n - 1);
  if (n == 2) {
    tree.emplace_back(0, 1);
  } else {
    std::vector<int> seq(n - 2);
    for (auto& s : seq) s = static_cast<int>(rng::below(gen, n));
    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) leaves.insert(v);
    }
    for (int s : seq) {
      const int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      tree.emplace_back(std::min(leaf, s), std::max(leaf, s));
      if (--degree[s] == 1) leaves.insert(s);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    tree.emplace_back(std::min(a, b), std::max(a, b));
  }

  // Top up with extra edges drawn uniformly from the non-tree pairs.
  std::set<std::pair<int, int>> in_tree(tree.begin(), tree.end());
  std::vector<std::pair<int, int>> candidates;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!in_tree.count({u, v})) candidates.emplace_back(u, v);
    }
  }
  const std::int64_t extra = target - (n - 1);
  for (std::int64_t k = 0; k < extra; ++k) {
    const std::int64_t j =
        k + static_cast<std::int64_t>(rng::below(gen, candidates.size() - k));
    std::swap(candidates[k], candidates[j]);
  }

  std::vector<std::pair<int, int>> pairs = std::move(tree);
  pairs.insert(pairs.end(), candidates.begin(), candidates.begin() + extra);
  std::sort(pairs.begin(), pairs.end());

  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    edges.push_back({u, v, rng::uniform_symmetric(gen, 1.0)});
  }
  return WeightedGraph(n, std::move(edges));
}

LinkStats link_stats(const WeightedGraph& g, const CoalitionStructure& p) {
  validate_partition(g, p);
  std::vector<int> label(g.node_count(), -1);
  for (std::size_t k = 0; k < p.coalitions.size(); ++k) {
    for (NodeId m : p.coalitions[k].members()) label[m] = static_cast<int>(k);
  }
  std::int64_t intra = 0;
  std::set<std::pair<int, int>> gateway_pairs;
  for (const auto& e : g.edges()) {
    const int lu = label[e.u];
    const int lv = label[e.v];
    if (lu == lv) {
      ++intra;
    } else {
      gateway_pairs.emplace(std::min(lu, lv), std::max(lu, lv));
    }
  }
  LinkStats stats;
  stats.links_before = g.edge_count();
  stats.links_after = intra + static_cast<std::int64_t>(gateway_pairs.size());
  stats.coalition_count = static_cast<std::int64_t>(p.coalitions.size());
  return stats;
}

}  // namespace cforge
