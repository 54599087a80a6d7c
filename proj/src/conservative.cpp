#include "oddpath/conservative.hpp"

#include <algorithm>

#include "oddpath/matching.hpp"

namespace oddpath {

std::vector<std::vector<int>> decompose_cycles(const WeightedGraph& g, const std::vector<int>& edge_ids) {
  std::vector<std::vector<Incidence>> adj(g.n());
  for (int e : edge_ids) {
    adj[g.edge(e).u].push_back({g.edge(e).v, e});
    adj[g.edge(e).v].push_back({g.edge(e).u, e});
  }
  std::vector<char> used(g.m(), 0);
  std::vector<std::size_t> cursor(g.n(), 0);
  std::vector<int> pos(g.n(), -1);
  std::vector<std::vector<int>> cycles;
  auto next_edge = [&](int v) -> int {
    while (cursor[v] < adj[v].size() && used[adj[v][cursor[v]].edge]) ++cursor[v];
    return cursor[v] < adj[v].size() ? static_cast<int>(cursor[v]) : -1;
  };
  for (int start = 0; start < g.n(); ++start) {
    std::vector<int> stack;
    int v = start;
    while (true) {
      int idx = next_edge(v);
      if (idx < 0) break;
      if (stack.empty()) {
        stack.push_back(v);
        pos[v] = 0;
      }
      auto [to, e] = adj[v][idx];
      used[e] = 1;
      if (pos[to] >= 0) {
        std::vector<int> cyc(stack.begin() + pos[to], stack.end());
        for (int x : cyc) pos[x] = -1;
        stack.resize(stack.size() - cyc.size());
        cycles.push_back(std::move(cyc));
        if (stack.empty()) {
          v = to;
          continue;
        }
        stack.push_back(to);
        pos[to] = static_cast<int>(stack.size()) - 1;
        v = to;
      } else {
        stack.push_back(to);
        pos[to] = static_cast<int>(stack.size()) - 1;
        v = to;
      }
    }
    for (int x : stack) pos[x] = -1;
  }
  return cycles;
}

ConservativeVerdict validate_conservative(const WeightedGraph& g) {
  ConservativeVerdict out;
  WeightedGraph absg(g.n());
  std::vector<int> degree(g.n(), 0);
  Rational neg_total;
  std::vector<char> negative(g.m(), 0);
  for (int i = 0; i < g.m(); ++i) {
    const Edge& e = g.edge(i);
    absg.add_edge(e.u, e.v, e.w.abs());
    if (e.w.is_negative()) {
      negative[i] = 1;
      degree[e.u] ^= 1;
      degree[e.v] ^= 1;
      neg_total += e.w.abs();
    }
  }
  if (neg_total.is_zero()) return out;
  std::vector<int> odd;
  for (int v = 0; v < g.n(); ++v)
    if (degree[v]) odd.push_back(v);
  TJoinResult join = min_weight_t_join(absg, odd);
  // E- itself is a T'-join, so the join always exists and join.weight <= neg_total
  if (join.status != Status::Found || join.weight >= neg_total) return out;

  std::vector<char> in_sym(g.m(), 0);
  for (int e : join.edges) in_sym[e] ^= 1;
  for (int e = 0; e < g.m(); ++e)
    if (negative[e]) in_sym[e] ^= 1;
  std::vector<int> sym;
  for (int e = 0; e < g.m(); ++e)
    if (in_sym[e]) sym.push_back(e);
  out.conservative = false;
  auto cycles = decompose_cycles(g, sym);
  bool have = false;
  for (auto& c : cycles) {
    std::vector<int> closed = c;
    closed.push_back(c.front());
    Rational w = path_weight(g, closed);
    if (w.is_negative() && (!have || w < out.witness_weight)) {
      out.witness_cycle = c;
      out.witness_weight = w;
      have = true;
    }
  }
  if (!have) throw SolverError(Errc::Structural, "cycle decomposition produced no negative cycle");
  return out;
}

void require_conservative(const WeightedGraph& g) {
  auto v = validate_conservative(g);
  if (v.conservative) return;
  std::string msg = "negative cycle";
  for (int x : v.witness_cycle) msg += " " + std::to_string(x);
  msg += " of weight " + v.witness_weight.to_string();
  throw SolverError(Errc::ConservativenessViolation, msg);
}

}  // namespace oddpath
