#pragma once

#include <cstdint>

#include "oddpath/graph.hpp"

namespace oddpath {

struct FptOptions {
  int negative_guard = 24;    // max |E-| for the full enumeration
  int matching_budget = 16;   // max 2*mu for the randomized and universal-set solvers
  std::uint64_t seed = 1;
  std::int64_t trials = -1;   // randomized solver; -1 means 2^(2 mu)
  int threads = 1;
  bool check_conservative = true;
};

struct FptStats {
  int negative_edges = 0;
  int mu = 0;
  std::int64_t calls = 0;        // constrained solves run
  std::int64_t family_size = 0;  // universal-set solver only
};

/// Size of a maximum matching among the negative edges.
int negative_matching_number(const WeightedGraph& g);

/// Minimum over all 2^|E-| even/odd labelings of the negative edges.
/// Throws ParameterTooLarge when |E-| exceeds the guard.
PathResult solve_fpt_negedges(const WeightedGraph& g, int s, int t, const FptOptions& opt = {},
                              FptStats* stats = nullptr);

/// Minimum over `trials` labelings drawn uniformly at random. Trial i is
/// seeded from (seed, i), so the result does not depend on thread count.
/// Never below the optimum; optimal with probability >= 1 - 1/e at the
/// default trial count.
PathResult solve_fpt_randomized(const WeightedGraph& g, int s, int t, const FptOptions& opt = {},
                                FptStats* stats = nullptr);

/// Labelings from an (|E-|, min(2 mu, |E-|))-universal family: the even
/// edges are U ∩ E- for each member U.
PathResult solve_fpt_derandomized(const WeightedGraph& g, int s, int t, const FptOptions& opt = {},
                                  FptStats* stats = nullptr);

}  // namespace oddpath
