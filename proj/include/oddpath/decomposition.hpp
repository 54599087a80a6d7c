#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddpath/graph.hpp"

namespace oddpath {

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;  // sorted vertex lists
  std::vector<std::pair<int, int>> tree_edges;
  int width() const;
};

/// Explanation when `td` is not a tree decomposition of g: the bag graph
/// must be a tree, every vertex and edge must be covered, and the bags
/// holding a vertex must be connected.
std::optional<std::string> check_decomposition(const WeightedGraph& g, const TreeDecomposition& td);

/// Elimination order by minimum fill-in, ties by degree then id.
std::vector<int> min_fill_order(const WeightedGraph& g);

/// Exact treewidth by dynamic programming over eliminated sets, pruned by
/// an upper bound. Throws ParameterTooLarge when n > max_n.
int exact_treewidth(const WeightedGraph& g, std::vector<int>* order = nullptr, int max_n = 20);

TreeDecomposition decomposition_from_order(const WeightedGraph& g, const std::vector<int>& order);

struct DecompositionOptions {
  bool exact = false;
  int exact_max_n = 20;
};

TreeDecomposition build_decomposition(const WeightedGraph& g, const DecompositionOptions& opt = {});

enum class NiceKind { Leaf, IntroduceVertex, Forget, IntroduceEdge, Join };
const char* nice_kind_name(NiceKind k);

struct NiceNode {
  NiceKind kind = NiceKind::Leaf;
  std::vector<int> bag;  // sorted
  int vertex = -1;       // introduced or forgotten vertex
  int edge = -1;         // introduced edge id
  std::vector<int> children;
};

/// Children precede parents in `nodes`; the root is the last node and its
/// bag is {s, t}. Every edge is introduced exactly once.
struct NiceDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;
  int width() const;
};

/// Adds t to the bags between a bag holding s and one holding t (width
/// grows by at most one), then expands into the five node kinds.
NiceDecomposition make_nice(const WeightedGraph& g, const TreeDecomposition& td, int s, int t);

std::optional<std::string> check_nice(const WeightedGraph& g, const NiceDecomposition& nd, int s, int t);

/// "b <node> <v...>" bag lines then "a <node> <node>" tree edges.
std::string write_decomposition_text(const TreeDecomposition& td);

}  // namespace oddpath
