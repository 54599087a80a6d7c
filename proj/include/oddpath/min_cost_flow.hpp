#pragma once

#include <cstdint>
#include <vector>

namespace oddpath {

/// Min-cost flow with node supplies and integer arc costs of any sign.
/// Negative arcs are saturated up front, which leaves a residual network with
/// non-negative costs; successive shortest paths with Dijkstra and node
/// potentials then repair the resulting imbalances.
class MinCostFlow {
 public:
  explicit MinCostFlow(int n) : n_(n), head_(n, -1), supply_(n, 0) {}

  int add_arc(int from, int to, std::int64_t cap, std::int64_t cost);
  void add_supply(int v, std::int64_t amount) { supply_[v] += amount; }
  /// Disabled arcs carry no flow.
  void disable_arc(int arc) { arcs_[2 * arc].cap = 0; }

  struct Result {
    bool feasible = false;
    std::int64_t cost = 0;
  };
  /// Flow that meets every supply exactly (positive = source) at minimum cost.
  Result solve();

  std::int64_t flow(int arc) const { return arcs_[2 * arc + 1].cap; }
  int arc_count() const { return static_cast<int>(arcs_.size() / 2); }
  int arc_from(int arc) const { return arcs_[2 * arc + 1].to; }
  int arc_to(int arc) const { return arcs_[2 * arc].to; }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
    std::int64_t cost;
  };
  void push(int idx, std::int64_t amount) {
    arcs_[idx].cap -= amount;
    arcs_[idx ^ 1].cap += amount;
  }

  int n_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<std::int64_t> supply_;
};

}  // namespace oddpath
