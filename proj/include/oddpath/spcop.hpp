#pragma once

#include <vector>

#include "oddpath/graph.hpp"
#include "oddpath/negative_forest.hpp"

namespace oddpath {

/// The matching gadget H. Vertices 0..n-1 are the originals; the copy of
/// every v other than s and t follows in increasing order of v. H has
///   - v-w for each edge outside F_even,
///   - v'-w' for each edge outside F_odd with neither end in {s,t},
///   - v-v' of weight 0.
struct SpcopGadget {
  WeightedGraph h;
  std::vector<int> copy_of;      // copy_of[v] for original v, -1 for s and t
  std::vector<int> original;     // original vertex of each H vertex
  std::vector<int> edge_origin;  // original edge id per H edge, -1 for v-v'
  std::vector<char> copy_side;   // 1 when the H edge lives among the copies
};

SpcopGadget build_spcop_gadget(const WeightedGraph& g, int s, int t, const ParityConstraints& c);

struct SpcopOptions {
  bool check_conservative = true;
  bool certify_matching = false;
};

struct SpcopStats {
  Rational matching_weight;
  int gadget_vertices = 0;
  int gadget_edges = 0;
  bool certificate_ok = true;
};

/// Minimum-weight odd s-t path whose F_even edges sit at even positions and
/// F_odd edges at odd positions. Every negative edge must be constrained.
PathResult solve_spcop(const WeightedGraph& g, int s, int t, const ParityConstraints& c,
                       const SpcopOptions& opt = {}, SpcopStats* stats = nullptr);

/// Odd path with all weights non-negative (unconstrained gadget).
PathResult shortest_odd_path_nonneg(const WeightedGraph& g, int s, int t);

/// Even path: odd path to a new pendant t' hanging off t with weight 0,
/// then t' is dropped.
PathResult shortest_even_path_nonneg(const WeightedGraph& g, int s, int t);

/// Cheapest a-b path avoiding tree `tree` except at a and b whose length
/// parity differs from |T[a,b]|. The rest of the graph must be non-negative.
PathResult parity_changing_leap_min(const WeightedGraph& g, const NegativeForest& forest, int tree, int a, int b);

}  // namespace oddpath
