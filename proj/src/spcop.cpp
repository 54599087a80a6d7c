#include "oddpath/spcop.hpp"

#include "oddpath/conservative.hpp"
#include "oddpath/matching.hpp"

namespace oddpath {

SpcopGadget build_spcop_gadget(const WeightedGraph& g, int s, int t, const ParityConstraints& c) {
  require_endpoints(g, s, t);
  auto labels = c.labels(g.m());
  const int n = g.n();
  SpcopGadget gd;
  gd.copy_of.assign(n, -1);
  gd.original.resize(n);
  for (int v = 0; v < n; ++v) gd.original[v] = v;
  int next = n;
  for (int v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    gd.copy_of[v] = next++;
    gd.original.push_back(v);
  }
  gd.h = WeightedGraph(next);
  for (int e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    if (labels[e] != 1) {
      gd.h.add_edge(ed.u, ed.v, ed.w);
      gd.edge_origin.push_back(e);
      gd.copy_side.push_back(0);
    }
  }
  for (int e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    if (labels[e] != 2 && gd.copy_of[ed.u] >= 0 && gd.copy_of[ed.v] >= 0) {
      gd.h.add_edge(gd.copy_of[ed.u], gd.copy_of[ed.v], ed.w);
      gd.edge_origin.push_back(e);
      gd.copy_side.push_back(1);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (gd.copy_of[v] < 0) continue;
    gd.h.add_edge(v, gd.copy_of[v], Rational(0));
    gd.edge_origin.push_back(-1);
    gd.copy_side.push_back(0);
  }
  return gd;
}

PathResult solve_spcop(const WeightedGraph& g, int s, int t, const ParityConstraints& c, const SpcopOptions& opt,
                       SpcopStats* stats) {
  require_endpoints(g, s, t);
  auto labels = c.labels(g.m());
  for (int e = 0; e < g.m(); ++e)
    if (g.edge(e).w.is_negative() && labels[e] == 0)
      throw SolverError(Errc::ConstraintCoverage, "negative edge " + std::to_string(e) + " is unconstrained");
  if (opt.check_conservative) require_conservative(g);

  SpcopGadget gd = build_spcop_gadget(g, s, t, c);
  if (stats) {
    stats->gadget_vertices = gd.h.n();
    stats->gadget_edges = gd.h.m();
  }
  MatchingResult mr = min_weight_perfect_matching(gd.h, opt.certify_matching);
  if (stats && mr.certificate_error) stats->certificate_ok = false;
  if (mr.status != Status::Found) return PathResult::infeasible();
  if (stats) stats->matching_weight = mr.weight;

  // M1 from the original side, M2 from the copies, both mapped into g
  const int n = g.n();
  std::vector<int> m1(n, -1), m2(n, -1);
  for (int he : mr.edges) {
    int e = gd.edge_origin[he];
    if (e < 0) continue;
    const Edge& ed = g.edge(e);
    auto& side = gd.copy_side[he] ? m2 : m1;
    side[ed.u] = e;
    side[ed.v] = e;
  }
  for (int v = 0; v < n; ++v) {
    if (m1[v] >= 0 && m1[v] == m2[v]) {
      // doubled edge: drop from both sides at both ends
      int e = m1[v];
      const Edge& ed = g.edge(e);
      m1[ed.u] = m1[ed.v] = m2[ed.u] = m2[ed.v] = -1;
    }
  }
  std::vector<int> path{s};
  int cur = s;
  bool use_first = true;
  while (cur != t) {
    int e = use_first ? m1[cur] : m2[cur];
    if (e < 0 || static_cast<int>(path.size()) > n)
      throw SolverError(Errc::Structural, "matching does not decompose into an s-t path");
    cur = g.edge(e).other(cur);
    path.push_back(cur);
    use_first = !use_first;
  }
  PathResult r = PathResult::make(path, path_weight(g, path));
  if (auto err = check_odd_path(g, s, t, r, &c))
    throw SolverError(Errc::Structural, "extracted path invalid: " + *err);
  return r;
}

PathResult shortest_odd_path_nonneg(const WeightedGraph& g, int s, int t) {
  for (const Edge& e : g.edges())
    if (e.w.is_negative()) throw SolverError(Errc::InvalidInput, "negative weight in a non-negative solver");
  SpcopOptions opt;
  opt.check_conservative = false;
  return solve_spcop(g, s, t, {}, opt);
}

PathResult shortest_even_path_nonneg(const WeightedGraph& g, int s, int t) {
  require_endpoints(g, s, t);
  WeightedGraph h = g;
  int tp = h.add_vertex();
  h.add_edge(t, tp, Rational(0));
  PathResult r = shortest_odd_path_nonneg(h, s, tp);
  if (!r.found()) return r;
  r.vertices.pop_back();
  return r;
}

PathResult parity_changing_leap_min(const WeightedGraph& g, const NegativeForest& forest, int tree, int a, int b) {
  int dist = static_cast<int>(forest.tree_path(tree, a, b).size());
  std::vector<char> keep_edge(g.m(), 1), keep_vertex(g.n(), 1);
  for (int e : forest.tree(tree).edges) keep_edge[e] = 0;
  for (int v : forest.tree(tree).vertices)
    if (v != a && v != b) keep_vertex[v] = 0;
  Subgraph sub = filter_graph(g, keep_edge, keep_vertex);
  PathResult r = dist % 2 == 1 ? shortest_even_path_nonneg(sub.graph, a, b) : shortest_odd_path_nonneg(sub.graph, a, b);
  return r;
}

}  // namespace oddpath
