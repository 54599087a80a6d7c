#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddpath/graph.hpp"

namespace oddpath {

enum class Algorithm { Auto, Tree, FptNeg, FptRand, FptDerand, Treewidth, Oracle };

std::string algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(const std::string& name);

struct Budgets {
  int negative_guard = 24;   // |E-| for the full enumeration
  int matching_budget = 16;  // 2*mu for the randomized and universal-set solvers
  int width_guard = 12;
  std::int64_t flow_budget = 200000;  // branch-and-bound nodes per disjoint-paths query
  int oracle_max_n = 16;
};

struct SolveOptions {
  Algorithm algorithm = Algorithm::Auto;
  Budgets budgets;
  std::uint64_t seed = 1;
  std::int64_t trials = -1;
  int threads = 1;
  bool exact_width = false;
  bool rank_reduce = false;
};

struct InstanceParameters {
  int trees = 0;
  int negative_edges = 0;
  int mu = 0;
  int width = -1;  // heuristic decomposition width; -1 if not computed
};

InstanceParameters measure(const WeightedGraph& g, bool with_width = true);

/// Tree when the negative edges form at most one tree, else the
/// universal-set solver when 2*mu fits the budget, else the treewidth DP
/// when the heuristic width fits; otherwise NoTractableAlgorithm listing
/// every parameter. `g` must already be known to be conservative.
Algorithm auto_select(const WeightedGraph& g, const Budgets& budgets, InstanceParameters* params = nullptr);

struct SolveOutcome {
  PathResult result;
  Algorithm algorithm = Algorithm::Auto;
  std::vector<std::pair<std::string, std::int64_t>> stats;
};

/// Checks conservativeness once, resolves Auto, then runs the solver.
SolveOutcome solve(const WeightedGraph& g, int s, int t, const SolveOptions& opt);

}  // namespace oddpath
