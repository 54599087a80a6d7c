#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oddpath/disjoint_paths.hpp"
#include "oddpath/graph.hpp"

namespace oddpath {

// Brute-force references. None of them shares search code with the solvers.

constexpr int kOracleMaxVertices = 16;

/// Calls `visit` for every simple s-t path (vertex list). Throws
/// ParameterTooLarge when g.n() exceeds max_n.
void oracle_for_each_path(const WeightedGraph& g, int s, int t, const std::function<void(const std::vector<int>&)>& visit,
                          int max_n = kOracleMaxVertices);

PathResult oracle_odd_path(const WeightedGraph& g, int s, int t, int max_n = kOracleMaxVertices);
PathResult oracle_even_path(const WeightedGraph& g, int s, int t, int max_n = kOracleMaxVertices);
PathResult oracle_spcop(const WeightedGraph& g, int s, int t, const ParityConstraints& c, int max_n = kOracleMaxVertices);
/// Every constrained odd s-t path.
std::vector<std::vector<int>> oracle_feasible_paths(const WeightedGraph& g, int s, int t, const ParityConstraints& c,
                                                    int max_n = kOracleMaxVertices);

DisjointPathsResult oracle_two_disjoint(const WeightedGraph& g, int s, int t, int a, int b,
                                        int max_n = kOracleMaxVertices);
/// Two s-t paths sharing only s and t (the s-t edge may serve one of them once).
DisjointPathsResult oracle_openly_disjoint(const WeightedGraph& g, int s, int t, int max_n = kOracleMaxVertices);

struct OracleCycleVerdict {
  bool conservative = true;
  std::vector<int> min_cycle;  // a cycle of minimum weight, empty if acyclic
  Rational min_weight;
};
OracleCycleVerdict oracle_conservative(const WeightedGraph& g, int max_n = kOracleMaxVertices);

/// Minimum perfect matching weight by recursion on the lowest unmatched vertex.
std::optional<std::int64_t> oracle_min_perfect_matching(int n, const std::vector<std::pair<std::pair<int, int>, std::int64_t>>& edges);
/// Minimum T-join weight over all edge subsets (m <= 22).
std::optional<Rational> oracle_t_join(const WeightedGraph& g, const std::vector<int>& t_set);
/// Maximum matching size over all edge subsets of `edge_ids` (at most 20 edges).
int oracle_max_matching(const WeightedGraph& g, const std::vector<int>& edge_ids);

// ---- sweeps ----

enum class SweepFilter { Conservative, SingleNegativeTree, NonNegative };

struct SweepSpec {
  int max_n = 5;
  int min_n = 2;
  std::vector<Rational> palette;  // weights an edge may take; an edge may also be absent
  SweepFilter filter = SweepFilter::Conservative;
  bool exhaustive = true;         // all labelled graphs with s = 0, t = 1
  std::uint64_t seed = 1;
  std::int64_t samples = 1000;    // sampled mode
  std::int64_t max_instances = 5'000'000;
};

struct NamedSolver {
  std::string name;
  std::function<PathResult(const WeightedGraph&, int, int)> solve;
};

struct SweepInstance {
  WeightedGraph g;
  int s = 0;
  int t = 1;
};

struct SweepDisagreement {
  SweepInstance instance;  // already minimized
  std::vector<std::pair<std::string, std::string>> answers;  // solver name, weight or "infeasible" / error
};

struct SweepReport {
  std::int64_t generated = 0;
  std::int64_t checked = 0;  // passed the filter
  std::int64_t disagreements = 0;
  std::optional<SweepDisagreement> first;
};

/// Instances in deterministic order; `visit` returns false to stop early.
void sweep_instances(const SweepSpec& spec, const std::function<bool(const SweepInstance&)>& visit);

bool passes_filter(const WeightedGraph& g, SweepFilter filter);

/// Runs every solver plus the odd-path oracle on each instance. A solver
/// that throws WrongSolver is skipped for that instance. The first
/// disagreement is shrunk by deleting edges, then isolated high vertices,
/// while the disagreement persists.
SweepReport sweep(const SweepSpec& spec, const std::vector<NamedSolver>& solvers);

/// Graph text format of an instance (for counterexample dumps).
std::string format_instance(const SweepInstance& inst);

}  // namespace oddpath
