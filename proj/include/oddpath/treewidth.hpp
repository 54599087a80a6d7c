#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddpath/decomposition.hpp"
#include "oddpath/graph.hpp"

namespace oddpath {

// Semantics of a table entry at node x with bag B: an edge set F of the
// edges introduced below x that is acyclic, has degree <= 2 everywhere,
// degree <= 1 at s and t, and degree 0 or 2 at every forgotten vertex.
// `degree` is F's degree on B, `parity` is |F| mod 2 and `pairing` joins the
// two degree-1 ends of each path of F. The weight is the minimum over all
// such F. A minimum odd s-t path is the root entry with s, t of degree 1,
// paired, parity 1.

struct TableEntry {
  std::vector<int> degree;  // per bag vertex, in bag order
  int parity = 0;
  std::vector<std::pair<int, int>> pairing;  // vertex ids, each pair sorted, list sorted
  Rational weight;
};

struct TreewidthOptions {
  int width_guard = 12;
  bool exact_width = false;
  bool rank_reduce = false;
  bool check_conservative = false;
};

struct TreewidthStats {
  int width = -1;
  int nodes = 0;
  std::int64_t table_entries = 0;  // summed over nodes
  std::int64_t peak_entries = 0;
  std::int64_t reduced_away = 0;
};

class PartitionDp {
 public:
  /// Weights are scaled to a common integer denominator internally.
  PartitionDp(const WeightedGraph& g, const NiceDecomposition& nd, int s, int t, bool rank_reduce = false);
  ~PartitionDp();
  PartitionDp(const PartitionDp&) = delete;
  PartitionDp& operator=(const PartitionDp&) = delete;

  void run();
  std::vector<TableEntry> table(int node) const;
  /// Minimum odd s-t path, rebuilt from back-pointers.
  PathResult answer() const;
  const TreewidthStats& stats() const;

 private:
  struct Impl;
  Impl* impl_;
};

/// Keeps a subset of one (degree, parity) slice that still contains a
/// cheapest compatible entry for every completion: rows are checked against
/// all cuts of the degree-1 vertices over GF(2), cheapest first, and only
/// independent rows survive. `pairings` index the degree-1 vertices 0..k-1.
/// Returns the kept indices in increasing order.
std::vector<int> reduce_representatives(int k, const std::vector<std::vector<std::pair<int, int>>>& pairings,
                                        const std::vector<Rational>& weights);

/// Compares every table entry with the minimum over all edge subsets of the
/// node's subgraph. For tiny graphs only (at most `max_edges` edges).
std::optional<std::string> check_tables_by_enumeration(const WeightedGraph& g, const NiceDecomposition& nd, int s,
                                                       int t, const PartitionDp& dp, int max_edges = 16);

/// Minimum odd s-t path by dynamic programming over a nice tree
/// decomposition of the component holding s. Throws ParameterTooLarge when
/// the width exceeds the guard (hard cap 14).
PathResult solve_treewidth(const WeightedGraph& g, int s, int t, const TreewidthOptions& opt = {},
                           TreewidthStats* stats = nullptr);

}  // namespace oddpath
