#include "oddpath/graph.hpp"

#include <algorithm>

namespace oddpath {

WeightedGraph::WeightedGraph(int n) {
  if (n < 0) throw SolverError(Errc::Structural, "negative vertex count");
  adj_.resize(n);
}

int WeightedGraph::add_vertex() {
  adj_.emplace_back();
  return n() - 1;
}

std::uint64_t WeightedGraph::key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

int WeightedGraph::add_edge(int u, int v, Rational w) {
  if (!valid_vertex(u) || !valid_vertex(v))
    throw SolverError(Errc::Structural, "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  if (u == v) throw SolverError(Errc::Structural, "self-loop at vertex " + std::to_string(u));
  auto [it, inserted] = index_.emplace(key(u, v), m());
  if (!inserted)
    throw SolverError(Errc::Structural, "parallel edge " + std::to_string(u) + " " + std::to_string(v));
  int id = m();
  edges_.push_back({u, v, w});
  adj_[u].push_back({v, id});
  adj_[v].push_back({u, id});
  return id;
}

std::optional<int> WeightedGraph::edge_id(int u, int v) const {
  if (!valid_vertex(u) || !valid_vertex(v) || u == v) return std::nullopt;
  auto it = index_.find(key(u, v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool WeightedGraph::has_negative_edge() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w.is_negative(); });
}

std::vector<int> WeightedGraph::negative_edges() const {
  std::vector<int> out;
  for (int i = 0; i < m(); ++i)
    if (edges_[i].w.is_negative()) out.push_back(i);
  return out;
}

std::vector<Rational> WeightedGraph::weights() const {
  std::vector<Rational> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.w);
  return out;
}

bool better_path(const PathResult& a, const PathResult& b) {
  if (!a.found()) return false;
  if (!b.found()) return true;
  if (a.weight != b.weight) return a.weight < b.weight;
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
  return a.vertices < b.vertices;
}

std::vector<std::int8_t> ParityConstraints::labels(int m) const {
  std::vector<std::int8_t> out(m, 0);
  for (int e : f_even) {
    if (e < 0 || e >= m) throw SolverError(Errc::InvalidInput, "constraint edge id out of range: " + std::to_string(e));
    out[e] = 1;
  }
  for (int e : f_odd) {
    if (e < 0 || e >= m) throw SolverError(Errc::InvalidInput, "constraint edge id out of range: " + std::to_string(e));
    if (out[e] == 1) throw SolverError(Errc::InvalidInput, "edge " + std::to_string(e) + " is in both F_even and F_odd");
    out[e] = 2;
  }
  return out;
}

std::vector<int> path_edge_ids(const WeightedGraph& g, std::span<const int> vertices) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    auto e = g.edge_id(vertices[i], vertices[i + 1]);
    if (!e)
      throw SolverError(Errc::InvalidInput,
                        "no edge " + std::to_string(vertices[i]) + " " + std::to_string(vertices[i + 1]));
    out.push_back(*e);
  }
  return out;
}

Rational path_weight(const WeightedGraph& g, std::span<const int> vertices) {
  Rational total;
  for (int e : path_edge_ids(g, vertices)) total += g.edge(e).w;
  return total;
}

Rational edge_set_weight(const WeightedGraph& g, std::span<const int> edge_ids) {
  Rational total;
  for (int e : edge_ids) total += g.edge(e).w;
  return total;
}

bool satisfies_constraints(const WeightedGraph& g, std::span<const int> vertices,
                           std::span<const std::int8_t> labels) {
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    auto e = g.edge_id(vertices[i], vertices[i + 1]);
    if (!e) return false;
    std::size_t sqn = i + 1;
    if (labels[*e] == 1 && sqn % 2 != 0) return false;
    if (labels[*e] == 2 && sqn % 2 != 1) return false;
  }
  return true;
}

std::optional<std::string> check_odd_path(const WeightedGraph& g, int s, int t, const PathResult& r,
                                          const ParityConstraints* constraints) {
  if (!r.found()) return std::nullopt;
  const auto& p = r.vertices;
  if (p.size() < 2) return "path has fewer than two vertices";
  if (p.front() != s || p.back() != t) return "path does not run from s to t";
  std::vector<char> seen(g.n(), 0);
  for (int v : p) {
    if (!g.valid_vertex(v)) return "vertex out of range";
    if (seen[v]) return "vertex " + std::to_string(v) + " repeats";
    seen[v] = 1;
  }
  std::vector<int> ids;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    auto e = g.edge_id(p[i], p[i + 1]);
    if (!e) return "consecutive vertices not adjacent";
    ids.push_back(*e);
  }
  if (ids.size() % 2 != 1) return "path has even length";
  if (edge_set_weight(g, ids) != r.weight) return "reported weight differs from edge sum";
  // edges at even positions, and at odd positions, each form a matching
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<char> used(g.n(), 0);
    for (std::size_t i = parity; i < ids.size(); i += 2) {
      const Edge& e = g.edge(ids[i]);
      if (used[e.u] || used[e.v]) return "same-parity edges share a vertex";
      used[e.u] = used[e.v] = 1;
    }
  }
  if (constraints) {
    auto labels = constraints->labels(g.m());
    if (!satisfies_constraints(g, p, labels)) return "sequence-number constraint violated";
    // reverse direction must agree on odd paths
    std::vector<int> rev(p.rbegin(), p.rend());
    if (!satisfies_constraints(g, rev, labels)) return "constraint check not direction independent";
  }
  return std::nullopt;
}

Subgraph filter_graph(const WeightedGraph& g, std::span<const char> keep_edge, std::span<const char> keep_vertex) {
  Subgraph out{WeightedGraph(g.n()), {}};
  for (int i = 0; i < g.m(); ++i) {
    if (!keep_edge.empty() && !keep_edge[i]) continue;
    const Edge& e = g.edge(i);
    if (!keep_vertex.empty() && (!keep_vertex[e.u] || !keep_vertex[e.v])) continue;
    out.graph.add_edge(e.u, e.v, e.w);
    out.edge_map.push_back(i);
  }
  return out;
}

void require_endpoints(const WeightedGraph& g, int s, int t) {
  if (!g.valid_vertex(s) || !g.valid_vertex(t))
    throw SolverError(Errc::InvalidInput, "terminal out of range");
  if (s == t) throw SolverError(Errc::InvalidInput, "s and t must differ");
}

}  // namespace oddpath
