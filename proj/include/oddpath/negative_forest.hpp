#pragma once

#include <span>
#include <vector>

#include "oddpath/graph.hpp"

namespace oddpath {

struct NegativeTree {
  std::vector<int> vertices;  // sorted
  std::vector<int> edges;     // sorted edge ids
  int root = -1;
};

/// Connected components of the subgraph spanned by negative edges, each an
/// acyclic tree rooted at its smallest vertex.
class NegativeForest {
 public:
  /// Throws SolverError(ConservativenessViolation) when some negative
  /// component contains a cycle.
  static NegativeForest build(const WeightedGraph& g);

  int size() const { return static_cast<int>(trees_.size()); }
  bool empty() const { return trees_.empty(); }
  const NegativeTree& tree(int i) const { return trees_[i]; }
  const std::vector<NegativeTree>& trees() const { return trees_; }

  /// Tree index containing v, or -1.
  int tree_of(int v) const { return tree_of_[v]; }
  bool on_tree(int t, int v) const { return v >= 0 && v < static_cast<int>(tree_of_.size()) && tree_of_[v] == t; }
  bool is_tree_edge(int e) const { return edge_tree_[e] >= 0; }
  int edge_tree(int e) const { return edge_tree_[e]; }

  /// Edge ids of the unique a-b path in tree t, ordered from a.
  /// Throws SolverError(InvalidEndpoint) if a or b is not on t, or a == b.
  std::vector<int> tree_path(int t, int a, int b) const;
  std::vector<int> tree_path_vertices(int t, int a, int b) const;
  int tree_distance(int a, int b) const;

 private:
  std::vector<NegativeTree> trees_;
  std::vector<int> tree_of_;
  std::vector<int> edge_tree_;
  std::vector<int> parent_;
  std::vector<int> parent_edge_;
  std::vector<int> depth_;
};

/// A maximal subpath of a path that meets tree `tree` exactly at its two
/// ends and uses no tree edge.
struct Leap {
  int tree = -1;
  int a = -1;  // endpoint met first along the scanned path
  int b = -1;
  std::vector<int> vertices;  // from a to b
  std::vector<int> edges;     // edge ids along the leap
  int start = 0;              // index of a in the scanned path
  int cycle_length = 0;       // |L| + |T[a,b]|
  bool parity_changing = false;
  std::vector<int> shadow;    // edges of the scanned edge set lying on T[a,b]
};

/// Leaps on the simple path `path` for every negative tree. The shadow is
/// taken against the edges of `path` itself.
std::vector<Leap> enumerate_leaps(const WeightedGraph& g, const NegativeForest& forest, std::span<const int> path);

/// Weight redistribution along a family of vertex-disjoint paths whose ends
/// all lie on tree `tree`. Leaps are processed in path order, each path read
/// from its first vertex. Each shadow edge is zeroed once and its weight is
/// spread evenly over the leap that first claims it. Returns the new weight
/// of every edge of g. Throws InvalidInput if the paths are not
/// vertex-disjoint or an endpoint is off the tree.
std::vector<Rational> redistribute_weights(const WeightedGraph& g, const NegativeForest& forest, int tree,
                                           const std::vector<std::vector<int>>& paths);

/// Leaps of tree `tree` on each path, with shadows against the union of all paths.
std::vector<Leap> leaps_on_family(const WeightedGraph& g, const NegativeForest& forest, int tree,
                                  const std::vector<std::vector<int>>& paths);

}  // namespace oddpath
