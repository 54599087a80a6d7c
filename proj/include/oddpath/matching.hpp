#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddpath/graph.hpp"

namespace oddpath {

struct IntEdge {
  int u;
  int v;
  std::int64_t w;
};

/// Dual solution of the weighted matching LP in the doubled convention: an
/// edge uv with weight w has slack y_u + y_v + 2 * sum(z_B : u,v in B) - 2w.
struct MatchingDual {
  std::vector<std::int64_t> vertex;
  std::vector<std::vector<int>> blossom_vertices;
  std::vector<std::int64_t> blossom;
};

/// Maximum-weight matching on general graphs (Edmonds' blossom method with
/// primal-dual updates, O(n^3)). With `max_cardinality` the matching has
/// maximum size first and maximum weight among those. Returns mate[v] as the
/// matched edge index or -1. Integer weights only; duals stay integral.
std::vector<int> max_weight_matching(int n, const std::vector<IntEdge>& edges, bool max_cardinality,
                                     MatchingDual* dual = nullptr);

/// Optimality certificate for a maximum-weight perfect matching: free vertex
/// duals, non-negative blossom duals, non-negative slacks, tight matched
/// edges, and every blossom with positive dual holding (|B|-1)/2 matched
/// edges. Returns an explanation on failure.
std::optional<std::string> check_perfect_matching_certificate(int n, const std::vector<IntEdge>& edges,
                                                              const std::vector<int>& mate_edge,
                                                              const MatchingDual& dual);

struct IntMatchingResult {
  bool perfect = false;
  std::vector<int> edges;  // indices into the input edge list
  std::int64_t weight = 0;
  std::optional<std::string> certificate_error;  // set only when certify was requested and failed
};

/// Minimum-weight perfect matching over integer weights of any sign. Weights
/// are shifted to K - w with K above the maximum; among perfect matchings
/// this ordering is reversed exactly.
IntMatchingResult min_weight_perfect_matching_int(int n, const std::vector<IntEdge>& edges, bool certify = false);

struct MatchingResult {
  Status status = Status::Infeasible;
  std::vector<int> edges;  // edge ids of g, sorted
  Rational weight;
  std::optional<std::string> certificate_error;
};

MatchingResult min_weight_perfect_matching(const WeightedGraph& g, bool certify = false);

struct TJoinResult {
  Status status = Status::Infeasible;
  std::vector<int> edges;  // sorted edge ids
  Rational weight;
};

/// Minimum-weight T-join for non-negative weights via shortest-path metric
/// closure, a perfect matching on T, and symmetric difference of the paths.
/// Throws InvalidInput for odd |T| or a negative weight.
TJoinResult min_weight_t_join(const WeightedGraph& g, const std::vector<int>& t_set);

/// Size of a maximum matching in the subgraph formed by `edge_ids`.
/// Computed as a perfect matching: real edges cost -1 and every vertex gets a
/// dummy partner at cost 0, dummies forming a zero-cost clique.
int maximum_matching_size(const WeightedGraph& g, const std::vector<int>& edge_ids);

}  // namespace oddpath
