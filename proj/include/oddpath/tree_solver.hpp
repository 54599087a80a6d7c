#pragma once

#include <functional>
#include <vector>

#include "oddpath/disjoint_paths.hpp"
#include "oddpath/graph.hpp"
#include "oddpath/negative_forest.hpp"

namespace oddpath {

/// Cycle C = L + T[a,b] cut at x and y into two x-y paths.
struct CycleCut {
  std::vector<int> cycle;  // cyclic vertex order: the leap from a to b, then the tree path back
  int x = -1;
  int y = -1;
  std::vector<int> c1;  // x to y, forward along `cycle`
  std::vector<int> c2;  // x to y, backward
};

struct SecondTypeCandidate {
  PathResult chosen;  // the odd one of s1 and s2
  std::vector<int> s1;
  std::vector<int> s2;
  Rational w1;
  Rational w2;
  CycleCut cut;
};

/// Joins P_s up to its first cycle vertex x, one arc of C from x to y, and
/// P_t from its first cycle vertex y. `leap` runs from a to b.
SecondTypeCandidate assemble_second_type(const WeightedGraph& g, const std::vector<int>& leap,
                                         const DisjointPathsResult& dp, const NegativeForest& forest, int tree);

struct SecondTypeTrace {
  int a = -1;
  int b = -1;
  PathResult leap;
  DisjointPathsResult dp;
  SecondTypeCandidate candidate;
};

struct TreeSolverOptions {
  int threads = 1;
  bool check_conservative = true;
  DisjointPathsOptions disjoint;
  /// Called for every second-type candidate; calls may come from worker threads.
  std::function<void(const SecondTypeTrace&)> trace;
};

struct TreeSolverStats {
  int tree_vertices = 0;
  int pairs = 0;
  int spcop_calls = 0;
  int second_type = 0;
  std::int64_t flow_nodes = 0;
};

/// Shortest odd path when the negative edges form at most one tree. For every
/// pair a,b of tree vertices: two parity-constrained solves on
/// G - (T - T[a,b]) with T[a,b] alternating from a, and, when a
/// parity-changing a-b leap exists, the leap closed up by two disjoint
/// paths from {s,t} to {a,b}. Throws WrongSolver for two or more trees.
PathResult solve_negative_tree(const WeightedGraph& g, int s, int t, const TreeSolverOptions& opt = {},
                               TreeSolverStats* stats = nullptr);

}  // namespace oddpath
