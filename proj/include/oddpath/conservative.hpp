#pragma once

#include <vector>

#include "oddpath/graph.hpp"

namespace oddpath {

struct ConservativeVerdict {
  bool conservative = true;
  std::vector<int> witness_cycle;  // closed vertex list, first vertex not repeated
  Rational witness_weight;
};

/// w is conservative iff the negative edges form a minimum |w|-weight
/// T'-join, T' the odd-degree vertices of the negative subgraph. Otherwise
/// J xor E- for a cheaper join J splits into cycles, one of them negative.
ConservativeVerdict validate_conservative(const WeightedGraph& g);

/// Throws SolverError(ConservativenessViolation) with the witness cycle.
void require_conservative(const WeightedGraph& g);

/// Splits an even-degree edge set into edge-disjoint simple cycles (vertex lists).
std::vector<std::vector<int>> decompose_cycles(const WeightedGraph& g, const std::vector<int>& edge_ids);

}  // namespace oddpath
