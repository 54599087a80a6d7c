#pragma once

// Small helpers shared by the unit tests and the acceptance runner. They
// recompute tree paths and leaps from scratch so the checks do not lean on
// the solver-side versions.

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "oddpath/graph.hpp"

namespace oddpath::testing {

inline bool same_answer(const PathResult& a, const PathResult& b) {
  if (a.found() != b.found()) return false;
  return !a.found() || a.weight == b.weight;
}

inline std::string show(const PathResult& r) { return r.found() ? r.weight.to_string() : std::string("infeasible"); }

/// Negative-edge components by plain BFS: comp[v] = component id or -1.
struct NegComponents {
  std::vector<int> comp;
  int count = 0;
  std::vector<int> vertices_of(int c) const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(comp.size()); ++v)
      if (comp[v] == c) out.push_back(v);
    return out;
  }
};

inline NegComponents negative_components(const WeightedGraph& g) {
  NegComponents nc;
  nc.comp.assign(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    if (nc.comp[v] >= 0) continue;
    bool touches = false;
    for (auto [to, e] : g.adj(v)) touches |= g.edge(e).w.is_negative();
    if (!touches) continue;
    std::queue<int> q;
    q.push(v);
    nc.comp[v] = nc.count;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (auto [to, e] : g.adj(x))
        if (g.edge(e).w.is_negative() && nc.comp[to] < 0) {
          nc.comp[to] = nc.count;
          q.push(to);
        }
    }
    ++nc.count;
  }
  return nc;
}

/// Vertex sequence of the negative-edge path from a to b (empty if none).
inline std::vector<int> negative_tree_path(const WeightedGraph& g, int a, int b) {
  std::vector<int> prev(g.n(), -2);
  std::queue<int> q;
  q.push(a);
  prev[a] = -1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (x == b) break;
    for (auto [to, e] : g.adj(x))
      if (g.edge(e).w.is_negative() && prev[to] == -2) {
        prev[to] = x;
        q.push(to);
      }
  }
  if (prev[b] == -2) return {};
  std::vector<int> out;
  for (int v = b; v != -1; v = prev[v]) out.push_back(v);
  std::reverse(out.begin(), out.end());
  return out;
}

struct SimpleLeap {
  int comp = -1;
  int i = 0;  // path index of the first end
  int j = 0;  // path index of the second end
  bool parity_changing = false;
};

/// Leaps on a simple path: consecutive visits to one negative tree that are
/// not joined by a single tree edge.
inline std::vector<SimpleLeap> simple_leaps(const WeightedGraph& g, const NegComponents& nc,
                                            const std::vector<int>& path) {
  std::vector<SimpleLeap> out;
  std::map<int, int> last;
  for (int i = 0; i < static_cast<int>(path.size()); ++i) {
    int c = nc.comp[path[i]];
    if (c < 0) continue;
    auto it = last.find(c);
    if (it != last.end()) {
      int j0 = it->second;
      bool tree_step = false;
      if (i == j0 + 1) {
        auto e = g.edge_id(path[j0], path[i]);
        tree_step = e && g.edge(*e).w.is_negative();
      }
      if (!tree_step) {
        int dist = static_cast<int>(negative_tree_path(g, path[j0], path[i]).size()) - 1;
        out.push_back({c, j0, i, ((i - j0) + dist) % 2 == 1});
      }
    }
    last[c] = i;
  }
  return out;
}

/// Random simple path from a to b by randomized DFS, or empty.
inline std::vector<int> random_simple_path(const WeightedGraph& g, int a, int b, std::mt19937_64& rng,
                                           int attempts = 8) {
  for (int k = 0; k < attempts; ++k) {
    std::vector<int> path{a};
    std::vector<char> used(g.n(), 0);
    used[a] = 1;
    while (path.back() != b) {
      std::vector<int> options;
      for (auto [to, e] : g.adj(path.back()))
        if (!used[to]) options.push_back(to);
      if (options.empty()) break;
      int nx = options[rng() % options.size()];
      used[nx] = 1;
      path.push_back(nx);
    }
    if (path.back() == b && path.size() >= 2) return path;
  }
  return {};
}

/// Random walk from a to b that never uses a negative edge twice, or empty.
inline std::vector<int> random_walk(const WeightedGraph& g, int a, int b, std::mt19937_64& rng, int max_steps = 24) {
  std::vector<int> walk{a};
  std::set<int> used_negative;
  for (int step = 0; step < max_steps; ++step) {
    std::vector<std::pair<int, int>> options;
    for (auto [to, e] : g.adj(walk.back()))
      if (!(g.edge(e).w.is_negative() && used_negative.count(e))) options.push_back({to, e});
    if (options.empty()) return {};
    auto [to, e] = options[rng() % options.size()];
    if (g.edge(e).w.is_negative()) used_negative.insert(e);
    walk.push_back(to);
    if (to == b && walk.size() >= 2 && rng() % 3 == 0) return walk;
  }
  return walk.back() == b && walk.size() >= 2 ? walk : std::vector<int>{};
}

/// Walk weight counting repeated edges every time.
inline Rational walk_weight(const WeightedGraph& g, const std::vector<int>& walk) {
  Rational w;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) w += g.edge(*g.edge_id(walk[i], walk[i + 1])).w;
  return w;
}

}  // namespace oddpath::testing
