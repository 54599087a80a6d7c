#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oddpath/error.hpp"
#include "oddpath/rational.hpp"

namespace oddpath {

struct Edge {
  int u = 0;
  int v = 0;
  Rational w;

  int other(int x) const { return x == u ? v : u; }
};

struct Incidence {
  int to;
  int edge;
};

/// Simple undirected graph with exact weights. Edge ids are assigned in
/// insertion order and never change.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  int add_vertex();
  /// Throws SolverError(Structural) on self-loops, parallel edges or bad ids.
  int add_edge(int u, int v, Rational w);

  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Incidence>& adj(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  std::optional<int> edge_id(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_id(u, v).has_value(); }

  void set_weight(int id, Rational w) { edges_[id].w = w; }

  bool valid_vertex(int v) const { return v >= 0 && v < n(); }
  bool has_negative_edge() const;
  std::vector<int> negative_edges() const;
  std::vector<Rational> weights() const;

 private:
  static std::uint64_t key(int u, int v);

  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
  std::unordered_map<std::uint64_t, int> index_;
};

enum class Status { Found, Infeasible };

/// A path solution from s to t, or the infeasible verdict.
struct PathResult {
  Status status = Status::Infeasible;
  std::vector<int> vertices;
  Rational weight;

  bool found() const { return status == Status::Found; }
  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }

  static PathResult infeasible() { return {}; }
  static PathResult make(std::vector<int> vertices, Rational weight) {
    return {Status::Found, std::move(vertices), weight};
  }
};

/// Order used to pick among equally good candidates: weight, then fewer
/// edges, then lexicographic vertex order. Infeasible sorts last.
bool better_path(const PathResult& a, const PathResult& b);

/// The (F_even, F_odd) pair, stored as edge-id lists.
struct ParityConstraints {
  std::vector<int> f_even;
  std::vector<int> f_odd;

  /// Per-edge label: 0 free, 1 even, 2 odd. Throws InvalidInput on overlap
  /// or out-of-range ids.
  std::vector<std::int8_t> labels(int m) const;
};

/// Edge ids along a vertex sequence; throws InvalidInput if a step is not an edge.
std::vector<int> path_edge_ids(const WeightedGraph& g, std::span<const int> vertices);
Rational path_weight(const WeightedGraph& g, std::span<const int> vertices);
Rational edge_set_weight(const WeightedGraph& g, std::span<const int> edge_ids);

/// Returns an explanation when `r` is not a valid odd s-t path in g (simple,
/// adjacent steps, odd length, correct weight, and sequence-number
/// constraints if given). Also rejects paths whose even-position or
/// odd-position edges fail to be matchings, which cannot happen for simple paths
/// but is checked independently.
std::optional<std::string> check_odd_path(const WeightedGraph& g, int s, int t, const PathResult& r,
                                          const ParityConstraints* constraints = nullptr);

/// Sequence-number constraint test alone (1-based positions from the first vertex).
bool satisfies_constraints(const WeightedGraph& g, std::span<const int> vertices,
                           std::span<const std::int8_t> labels);

/// Subgraph with some edges removed and some vertices isolated. Vertex ids
/// are kept; `edge_map[new_id]` is the original id.
struct Subgraph {
  WeightedGraph graph;
  std::vector<int> edge_map;
};
Subgraph filter_graph(const WeightedGraph& g, std::span<const char> keep_edge,
                      std::span<const char> keep_vertex = {});

void require_endpoints(const WeightedGraph& g, int s, int t);

}  // namespace oddpath
