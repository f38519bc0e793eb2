#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cforge/graph.hpp"

namespace cforge {

// Binary assignment, one 0/1 entry per QUBO variable.
using Assignment = std::vector<std::uint8_t>;

// Quadratic unconstrained binary objective
//   E(x) = offset + sum_{i<=j} coeff(i,j) * x_i * x_j
// stored sparsely with keys normalized to i <= j. Mutation is only used
// while building; evaluation is const and thread-safe.
class Qubo {
 public:
  Qubo() = default;
  explicit Qubo(int num_vars, double offset = 0.0);

  int num_vars() const { return num_vars_; }
  double offset() const { return offset_; }
  void add_offset(double delta) { offset_ += delta; }

  // Accumulates coeff onto term (min(i,j), max(i,j)); rejects out-of-range
  // indices and non-finite coefficients.
  void add_term(int i, int j, double coeff);

  // Coefficient of term (i, j), zero when absent.
  double coefficient(int i, int j) const;

  // Appends a fresh variable and returns its index.
  int add_variable() { return num_vars_++; }

  // Terms keyed (i, j) with i <= j, in deterministic ascending order.
  const std::map<std::pair<int, int>, double>& terms() const { return terms_; }

  double sum_abs_coefficients() const;

 private:
  int num_vars_ = 0;
  double offset_ = 0.0;
  std::map<std::pair<int, int>, double> terms_;
};

// Evaluates E(x); x.size() must equal num_vars().
double energy(const Qubo& q, const Assignment& x);

// Mapping from split-QUBO variables back to coalition members. Variable i
// carries var_to_node[i]; fixed_node (present when the symmetry was fixed)
// is pinned to side 0.
struct VarMap {
  std::vector<NodeId> var_to_node;
  std::optional<NodeId> fixed_node;
};

struct SplitQubo {
  Qubo qubo;
  VarMap vars;
};

// QUBO whose energy at assignment x equals the cut weight of the bipartition
// of c given by x (side 1 = members with bit 1). With fix_symmetry the
// smallest member is pinned to side 0, eliminating one variable.
// c must have at least 2 members, all inside g.
SplitQubo build_split_qubo(const WeightedGraph& g, const Coalition& c,
                           bool fix_symmetry = true);

// Adds a reward of -lambda on any assignment whose original variables are
// not all zero, implemented with a chain of exact quadratic OR gadgets over
// auxiliary variables. Relative energies of proper (not-all-zero) states are
// preserved at consistent auxiliary settings; the all-zero state is lifted
// by +lambda; states with inconsistent auxiliaries are lifted by at least
// the gadget magnitude (>= lambda). lambda must be positive.
Qubo add_proper_split_penalty(const Qubo& q, double lambda);

}  // namespace cforge
