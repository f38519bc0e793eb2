#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cforge/graph.hpp"
#include "cforge/tle.hpp"

namespace cforge {

inline constexpr double kSpeedOfLightKmS = 299792.458;

enum class WeightMode { kComposite, kStarlink };

// Edge-weight model for inter-satellite links. Composite mode combines the
// four link qualities linearly; starlink mode turns link distance into a
// signed proximity score with deterministic per-edge noise.
struct WeightModel {
  WeightMode mode = WeightMode::kStarlink;
  // Composite combination coefficients.
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  double delta = 1.0;
  // Starlink noise amplitude and stream seed.
  double noise_amplitude = 1.5;
  std::uint64_t seed = 0;
  // Optional overrides mapping link distance (km) to the composite inputs;
  // unset members default to latency = d / c and the rest to 1.
  std::function<double(double)> latency;
  std::function<double(double)> reliability;
  std::function<double(double)> management;
  std::function<double(double)> bandwidth;
};

// alpha*L + beta*R + gamma*M + delta*B; all inputs must be finite and
// model.mode must be kComposite.
double composite_weight(double latency, double reliability, double management,
                        double bandwidth, const WeightModel& model);

// Signed proximity weight for the link (u, v) at separation distance_km:
//   1 - d/radius + noise,   noise ~ U(-amp, amp)
// keyed deterministically by (model.seed, min(u,v), max(u,v)). Returns
// nullopt when d exceeds the radius (no link). model.mode must be kStarlink.
std::optional<double> starlink_weight(NodeId u, NodeId v, double distance_km,
                                      double radius_km, const WeightModel& model);

// Graph over the given satellite states: node i is states[i], and an edge
// joins every pair within radius_km, weighted per the model.
WeightedGraph build_geometric_graph(const std::vector<StateVector>& states,
                                    double radius_km, const WeightModel& model);

// Number of edges a synthetic instance of the given size carries:
// sparsity 0 is complete, 1 is a spanning tree, linear in between.
std::int64_t synthetic_edge_count(int n, double sparsity);

// Connected random instance: a uniform spanning tree (random Pruefer
// sequence) topped up with uniformly chosen extra edges, weights i.i.d.
// U(-1, 1). Deterministic in (n, sparsity, seed).
WeightedGraph generate_synthetic_graph(int n, double sparsity, std::uint64_t seed);

struct LinkStats {
  std::int64_t links_before = 0;  // edges of the full graph
  std::int64_t links_after = 0;   // intra-coalition edges + one per
                                  // connected coalition pair
  std::int64_t coalition_count = 0;
};

// Link-budget effect of a coalition structure: members keep their internal
// links and each pair of coalitions joined by at least one edge keeps a
// single gateway link.
LinkStats link_stats(const WeightedGraph& g, const CoalitionStructure& p);

}  // namespace cforge
