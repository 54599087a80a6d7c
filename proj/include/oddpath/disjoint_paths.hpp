#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "oddpath/graph.hpp"

namespace oddpath {

/// Two vertex-disjoint paths, path_s starting at s and path_t starting at t.
/// For the openly disjoint variant both run from s to t and share only the ends.
struct DisjointPathsResult {
  Status status = Status::Infeasible;
  std::vector<int> path_s;
  std::vector<int> path_t;
  Rational total_weight;

  bool found() const { return status == Status::Found; }
};

struct DisjointPathsOptions {
  /// Upper bound on branch-and-bound nodes; exceeding it throws
  /// SolverError(ParameterTooLarge).
  std::int64_t node_budget = 200000;
};

struct DisjointPathsStats {
  std::int64_t nodes = 0;
};

/// Minimum total weight of vertex-disjoint P_s (from s) and P_t (from t)
/// ending one at a and one at b. A terminal equal to its end gives a
/// single-vertex path. Requires conservative weights.
///
/// Solved as a 2-unit min-cost flow on the vertex-split digraph. A flow
/// that sends one unit each way across a negative edge is split into the two
/// branches that forbid one direction each; best-first search over those
/// branches stops at the first flow without such a 2-cycle. Any other cycle
/// left in the flow is a simple cycle of g and is dropped (weight >= 0).
DisjointPathsResult two_disjoint_paths(const WeightedGraph& g, int s, int t, int a, int b,
                                       const DisjointPathsOptions& opt = {}, DisjointPathsStats* stats = nullptr);

/// Two openly disjoint s-t paths of minimum total weight through the odd
/// path gadget: s' copies N(s), t' copies N(t), every edge is subdivided with
/// halved weights, t-t' gets weight 0, and an odd s-s' path is solved by
/// `sop_solver`. The gadget can carry negative cycles when negative edges
/// touch s or t, so the solver must not assume conservativeness.
using OddPathSolver = std::function<PathResult(const WeightedGraph&, int, int)>;
DisjointPathsResult stdp_via_sop(const WeightedGraph& g, int s, int t, const OddPathSolver& sop_solver);

/// Same quantity computed with two_disjoint_paths on a graph where s and t
/// are each split into two copies (the s-t edge, if any, joins one pair only).
DisjointPathsResult openly_disjoint_by_flow(const WeightedGraph& g, int s, int t,
                                            const DisjointPathsOptions& opt = {});

}  // namespace oddpath
