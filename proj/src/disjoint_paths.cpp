#include "oddpath/disjoint_paths.hpp"

#include <algorithm>
#include <queue>

#include "oddpath/min_cost_flow.hpp"

namespace oddpath {
namespace {

struct FlowNode {
  std::int64_t bound;
  std::int64_t order;
  std::vector<int> forbidden;  // arc index into the edge-arc table: 2*e (u->v) or 2*e+1 (v->u)
  std::vector<std::int64_t> edge_flow;  // per directed edge arc
  bool operator>(const FlowNode& o) const { return bound != o.bound ? bound > o.bound : order > o.order; }
};

struct SplitNetwork {
  const WeightedGraph& g;
  const std::vector<std::int64_t>& w;
  int s, t, a, b;

  // returns false when infeasible
  bool solve(const std::vector<int>& forbidden, std::int64_t& cost, std::vector<std::int64_t>& edge_flow) const {
    const int n = g.n();
    MinCostFlow f(2 * n + 2);
    const int sigma = 2 * n, tau = 2 * n + 1;
    for (int v = 0; v < n; ++v) f.add_arc(2 * v, 2 * v + 1, 1, 0);
    std::vector<int> arc_of(2 * g.m());
    for (int e = 0; e < g.m(); ++e) {
      const Edge& ed = g.edge(e);
      arc_of[2 * e] = f.add_arc(2 * ed.u + 1, 2 * ed.v, 1, w[e]);
      arc_of[2 * e + 1] = f.add_arc(2 * ed.v + 1, 2 * ed.u, 1, w[e]);
    }
    for (int x : forbidden) f.disable_arc(arc_of[x]);
    f.add_arc(sigma, 2 * s, 1, 0);
    f.add_arc(sigma, 2 * t, 1, 0);
    f.add_arc(2 * a + 1, tau, 1, 0);
    f.add_arc(2 * b + 1, tau, 1, 0);
    f.add_supply(sigma, 2);
    f.add_supply(tau, -2);
    auto r = f.solve();
    if (!r.feasible) return false;
    cost = r.cost;
    edge_flow.assign(2 * g.m(), 0);
    for (int i = 0; i < 2 * g.m(); ++i) edge_flow[i] = f.flow(arc_of[i]);
    return true;
  }

  // walk one unit of flow from terminal `start` to a or b
  std::vector<int> walk(int start, const std::vector<int>& next) const {
    std::vector<int> path{start};
    int v = start;
    while (next[v] >= 0) {
      v = next[v];
      path.push_back(v);
      if (static_cast<int>(path.size()) > g.n()) throw SolverError(Errc::Structural, "flow walk does not terminate");
    }
    return path;
  }
};

}  // namespace

DisjointPathsResult two_disjoint_paths(const WeightedGraph& g, int s, int t, int a, int b,
                                       const DisjointPathsOptions& opt, DisjointPathsStats* stats) {
  for (int v : {s, t, a, b})
    if (!g.valid_vertex(v)) throw SolverError(Errc::InvalidInput, "terminal out of range");
  if (s == t || a == b) throw SolverError(Errc::InvalidInput, "terminals must be distinct pairs");
  auto weights = g.weights();
  ScaledWeights sw = scale_to_integers(weights, static_cast<std::int64_t>(2 * g.m()) + 4);
  SplitNetwork net{g, sw.values, s, t, a, b};

  std::priority_queue<FlowNode, std::vector<FlowNode>, std::greater<>> open;
  std::int64_t order = 0;
  auto expand = [&](std::vector<int> forbidden) {
    FlowNode node;
    if (stats) ++stats->nodes;
    if (++order > opt.node_budget)
      throw SolverError(Errc::ParameterTooLarge, "two-disjoint-paths search exceeded its node budget");
    if (!net.solve(forbidden, node.bound, node.edge_flow)) return;
    node.order = order;
    node.forbidden = std::move(forbidden);
    open.push(std::move(node));
  };
  expand({});
  while (!open.empty()) {
    FlowNode node = open.top();
    open.pop();
    int conflict = -1;
    for (int e = 0; e < g.m(); ++e) {
      if (node.edge_flow[2 * e] > 0 && node.edge_flow[2 * e + 1] > 0) {
        if (sw.values[e] < 0) {
          conflict = e;
          break;
        }
        node.edge_flow[2 * e] = node.edge_flow[2 * e + 1] = 0;  // non-negative 2-cycle, drop
      }
    }
    if (conflict >= 0) {
      auto left = node.forbidden;
      left.push_back(2 * conflict);
      auto right = node.forbidden;
      right.push_back(2 * conflict + 1);
      expand(std::move(left));
      expand(std::move(right));
      continue;
    }
    std::vector<int> next(g.n(), -1);
    for (int e = 0; e < g.m(); ++e) {
      const Edge& ed = g.edge(e);
      if (node.edge_flow[2 * e] > 0) next[ed.u] = ed.v;
      if (node.edge_flow[2 * e + 1] > 0) next[ed.v] = ed.u;
    }
    DisjointPathsResult res;
    res.status = Status::Found;
    res.path_s = net.walk(s, next);
    res.path_t = net.walk(t, next);
    auto ends_ok = [&](const std::vector<int>& p) { return p.back() == a || p.back() == b; };
    if (!ends_ok(res.path_s) || !ends_ok(res.path_t) || res.path_s.back() == res.path_t.back())
      throw SolverError(Errc::Structural, "flow paths end outside {a,b}");
    res.total_weight = path_weight(g, res.path_s) + path_weight(g, res.path_t);
    return res;
  }
  return {};
}

DisjointPathsResult openly_disjoint_by_flow(const WeightedGraph& g, int s, int t, const DisjointPathsOptions& opt) {
  require_endpoints(g, s, t);
  const int n = g.n();
  WeightedGraph h(n + 2);
  const int s2 = n, t2 = n + 1;
  for (const Edge& e : g.edges()) {
    h.add_edge(e.u, e.v, e.w);
    bool st = (e.u == s && e.v == t) || (e.u == t && e.v == s);
    if (st) continue;
    for (int end = 0; end < 2; ++end) {
      int x = end == 0 ? e.u : e.v;
      int y = end == 0 ? e.v : e.u;
      if (x == s) h.add_edge(s2, y == t ? t2 : y, e.w);
      if (x == t && y != s) h.add_edge(t2, y, e.w);
    }
  }
  auto r = two_disjoint_paths(h, s, s2, t, t2, opt);
  if (!r.found()) return r;
  auto fix = [&](std::vector<int>& p) {
    for (int& v : p) {
      if (v == s2) v = s;
      if (v == t2) v = t;
    }
  };
  fix(r.path_s);
  fix(r.path_t);
  return r;
}

DisjointPathsResult stdp_via_sop(const WeightedGraph& g, int s, int t, const OddPathSolver& sop_solver) {
  require_endpoints(g, s, t);
  const int n = g.n();
  // base graph with s' and t'
  const int sp = n, tp = n + 1;
  struct Raw {
    int u, v;
    Rational w;
  };
  std::vector<Raw> raw;
  for (const Edge& e : g.edges()) {
    raw.push_back({e.u, e.v, e.w});
    for (int end = 0; end < 2; ++end) {
      int x = end == 0 ? e.u : e.v;
      int y = end == 0 ? e.v : e.u;
      if (x == s && y != t) raw.push_back({sp, y, e.w});
      if (x == t && y != s) raw.push_back({tp, y, e.w});
    }
  }
  WeightedGraph h(n + 2);
  std::vector<int> middle_of_edge;  // h vertex -> base-graph vertex or -1 for subdivision vertices
  for (int v = 0; v < n + 2; ++v) middle_of_edge.push_back(v);
  for (const Raw& r : raw) {
    int mid = h.add_vertex();
    middle_of_edge.push_back(-1);
    Rational half = r.w.half();
    h.add_edge(r.u, mid, half);
    h.add_edge(mid, r.v, half);
  }
  h.add_edge(t, tp, Rational(0));
  PathResult odd = sop_solver(h, s, sp);
  if (!odd.found()) return {};
  std::vector<int> base;
  for (int v : odd.vertices)
    if (middle_of_edge[v] >= 0) base.push_back(v);
  // base runs s ... t t' ... s' or s ... t' t ... s'
  std::size_t cut = base.size();
  for (std::size_t i = 0; i + 1 < base.size(); ++i) {
    bool tt = (base[i] == t && base[i + 1] == tp) || (base[i] == tp && base[i + 1] == t);
    if (tt) cut = i;
  }
  if (cut == base.size()) throw SolverError(Errc::Structural, "odd gadget path avoids the t-t' edge");
  DisjointPathsResult res;
  res.status = Status::Found;
  res.path_s.assign(base.begin(), base.begin() + cut + 1);
  res.path_t.assign(base.begin() + cut + 1, base.end());
  std::reverse(res.path_t.begin(), res.path_t.end());
  auto fix = [&](std::vector<int>& p) {
    for (int& v : p) {
      if (v == sp) v = s;
      if (v == tp) v = t;
    }
  };
  fix(res.path_s);
  fix(res.path_t);
  // both now read s ... t
  if (res.path_s.front() != s || res.path_s.back() != t || res.path_t.front() != s || res.path_t.back() != t)
    throw SolverError(Errc::Structural, "gadget path maps to malformed s-t paths");
  res.total_weight = path_weight(g, res.path_s) + path_weight(g, res.path_t);
  if (res.total_weight != odd.weight) throw SolverError(Errc::Structural, "gadget weight does not map back");
  return res;
}

}  // namespace oddpath
