#include "cforge/qubo.hpp"

#include <cmath>
#include <stdexcept>

namespace cforge {

Qubo::Qubo(int num_vars, double offset) : num_vars_(num_vars), offset_(offset) {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
}

void Qubo::add_term(int i, int j, double coeff) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= num_vars_) throw std::out_of_range("QUBO term index out of range");
  if (!std::isfinite(coeff)) throw std::invalid_argument("non-finite QUBO coefficient");
  terms_[{i, j}] += coeff;
}

double Qubo::coefficient(int i, int j) const {
  if (i > j) std::swap(i, j);
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? 0.0 : it->second;
}

double Qubo::sum_abs_coefficients() const {
  double total = 0.0;
  for (const auto& [key, coeff] : terms_) total += std::abs(coeff);
  return total;
}

double energy(const Qubo& q, const Assignment& x) {
  if (static_cast<int>(x.size()) != q.num_vars()) {
    throw std::invalid_argument("assignment length does not match variable count");
  }
  double total = q.offset();
  for (const auto& [key, coeff] : q.terms()) {
    if (x[key.first] && x[key.second]) total += coeff;
  }
  return total;
}

SplitQubo build_split_qubo(const WeightedGraph& g, const Coalition& c,
                           bool fix_symmetry) {
  if (c.size() < 2) {
    throw std::invalid_argument("split QUBO needs a coalition of at least 2 members");
  }
  for (NodeId m : c.members()) {
    if (m < 0 || m >= g.node_count()) {
      throw std::invalid_argument("coalition member outside the graph");
    }
  }
  // Energy of x is the total weight crossing the bipartition {bit 1} vs
  // {bit 0}: per internal edge (u, v, w),
  //   w*xu + w*xv - 2w*xu*xv = w * [xu != xv].
  const NodeId pinned = c.smallest();
  std::vector<int> var_of(g.node_count() > 0 ? g.node_count() : 1, -1);
  VarMap vars;
  for (NodeId m : c.members()) {
    if (fix_symmetry && m == pinned) continue;
    var_of[m] = static_cast<int>(vars.var_to_node.size());
    vars.var_to_node.push_back(m);
  }
  if (fix_symmetry) vars.fixed_node = pinned;

  Qubo q(static_cast<int>(vars.var_to_node.size()));
  std::vector<char> in(g.node_count(), 0);
  for (NodeId m : c.members()) in[m] = 1;
  for (NodeId u : c.members()) {
    for (const auto& [v, w] : g.neighbors(u)) {
      if (u >= v || !in[v]) continue;
      const int iu = var_of[u];
      const int iv = var_of[v];
      if (iu >= 0 && iv >= 0) {
        q.add_term(iu, iu, w);
        q.add_term(iv, iv, w);
        q.add_term(iu, iv, -2.0 * w);
      } else if (iu >= 0 || iv >= 0) {
        // Edge incident to the pinned node (side 0): cut iff the free
        // endpoint sits on side 1.
        const int free_var = iu >= 0 ? iu : iv;
        q.add_term(free_var, free_var, w);
      }
    }
  }
  return {std::move(q), std::move(vars)};
}

Qubo add_proper_split_penalty(const Qubo& q, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("penalty weight must be positive");
  const int k = q.num_vars();
  if (k < 1) throw std::invalid_argument("penalty needs at least one variable");

  Qubo out = q;
  out.add_offset(lambda);
  if (k == 1) {
    // y = x0 directly; reward -lambda when set.
    out.add_term(0, 0, -lambda);
    return out;
  }

  // y_i = y_{i-1} OR x_i via the exact gadget
  //   A * (a*b + (a + b)(1 - 2c) + c),
  // zero exactly when c == a OR b and >= A otherwise. A is large enough
  // that violating a gadget always costs more than any consistent state.
  const double magnitude = lambda + 2.0 * q.sum_abs_coefficients() + 1.0;
  int prev = 0;
  for (int i = 1; i < k; ++i) {
    const int aux = out.add_variable();
    out.add_term(prev, i, magnitude);
    out.add_term(prev, prev, magnitude);
    out.add_term(i, i, magnitude);
    out.add_term(prev, aux, -2.0 * magnitude);
    out.add_term(i, aux, -2.0 * magnitude);
    out.add_term(aux, aux, magnitude);
    prev = aux;
  }
  out.add_term(prev, prev, -lambda);
  return out;
}

}  // namespace cforge
