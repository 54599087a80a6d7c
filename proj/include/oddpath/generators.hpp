#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "oddpath/graph_io.hpp"

namespace oddpath {

// Vertex ids in the fixed instances: s = 0, t = 1, v_i = i + 1.

/// Nine vertices, negative tree v1v2, v2v3, v3v4, v3v5, v5v6 at -1.
Instance leap_example_instance();

/// Seven vertices with F_odd = {s v1, v2 v3, v4 t} and F_even = {v1 v2, v3 v4}.
/// `weights` (9 entries, in edge-id order) defaults to all 1.
Instance constrained_example_instance(const std::vector<Rational>& weights = {});

/// A negative path (the spine, positions 0..4r+3) plus one pendant tree
/// vertex, with r outgoing leaps, r-1 returning leaps, one pendant leap and
/// one parity-changing leap. The only odd s-t path uses every leap. Leap
/// weights equal the tree distance they span, so every cycle weighs >= 0.
Instance interlaced_leaps_instance(int rungs);
/// The unique odd path of interlaced_leaps_instance(rungs).
std::vector<int> interlaced_leaps_path(int rungs);
/// Edge ids of the non-tree leaps of interlaced_leaps_instance(rungs).
std::vector<int> interlaced_leaps_edges(int rungs);

struct RandomGraphSpec {
  int n = 8;
  double edge_probability = 0.4;
  bool connected = true;      // add a random spanning tree first
  int max_weight = 5;         // non-negative weights drawn from 0..max_weight
  int max_negative = 2;       // negative weights drawn from -max_negative..-1
  double negative_fraction = 0.5;  // share of spanning-forest edges made negative
};

/// Non-negative random graph; a random subset of a random spanning forest is
/// made negative, then positive edges on negative cycles are raised until
/// the weights are conservative.
Instance random_conservative(const RandomGraphSpec& spec, std::mt19937_64& rng);

/// Like random_conservative, but the negative edges form a single tree on
/// `tree_size` vertices (0 means: random size in 2..n).
Instance random_single_tree(const RandomGraphSpec& spec, int tree_size, std::mt19937_64& rng);

/// Random k-tree on n vertices (treewidth exactly k for n > k), weights as in
/// `spec`, with a conservative negative tree on up to `tree_size` vertices.
Instance random_ktree(int n, int k, const RandomGraphSpec& spec, int tree_size, std::mt19937_64& rng);

/// Raises positive edges on negative cycles until g is conservative. Fails
/// with ConservativenessViolation if a negative cycle has no positive edge.
void make_conservative(WeightedGraph& g);

}  // namespace oddpath
