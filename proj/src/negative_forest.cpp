#include "oddpath/negative_forest.hpp"

#include <algorithm>
#include <numeric>

namespace oddpath {

NegativeForest NegativeForest::build(const WeightedGraph& g) {
  const int n = g.n();
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::vector<char> touched(n, 0);
  for (int e : g.negative_edges()) {
    const Edge& ed = g.edge(e);
    int a = find(ed.u), b = find(ed.v);
    if (a == b)
      throw SolverError(Errc::ConservativenessViolation,
                        "negative edges contain a cycle through edge " + std::to_string(e));
    uf[a] = b;
    touched[ed.u] = touched[ed.v] = 1;
  }

  NegativeForest f;
  f.tree_of_.assign(n, -1);
  f.edge_tree_.assign(g.m(), -1);
  f.parent_.assign(n, -1);
  f.parent_edge_.assign(n, -1);
  f.depth_.assign(n, 0);
  for (int r = 0; r < n; ++r) {
    if (!touched[r] || f.tree_of_[r] >= 0) continue;
    int id = f.size();
    NegativeTree tree;
    tree.root = r;
    std::vector<int> queue{r};
    f.tree_of_[r] = id;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      tree.vertices.push_back(v);
      for (auto [to, e] : g.adj(v)) {
        if (!g.edge(e).w.is_negative() || f.tree_of_[to] >= 0) continue;
        f.tree_of_[to] = id;
        f.parent_[to] = v;
        f.parent_edge_[to] = e;
        f.depth_[to] = f.depth_[v] + 1;
        f.edge_tree_[e] = id;
        tree.edges.push_back(e);
        queue.push_back(to);
      }
    }
    std::sort(tree.vertices.begin(), tree.vertices.end());
    std::sort(tree.edges.begin(), tree.edges.end());
    f.trees_.push_back(std::move(tree));
  }
  return f;
}

std::vector<int> NegativeForest::tree_path_vertices(int t, int a, int b) const {
  if (t < 0 || t >= size()) throw SolverError(Errc::InvalidEndpoint, "no tree " + std::to_string(t));
  if (!on_tree(t, a) || !on_tree(t, b))
    throw SolverError(Errc::InvalidEndpoint, "vertex not on tree " + std::to_string(t));
  if (a == b) throw SolverError(Errc::InvalidEndpoint, "tree path endpoints coincide");
  std::vector<int> left{a}, right{b};
  int x = a, y = b;
  while (depth_[x] > depth_[y]) left.push_back(x = parent_[x]);
  while (depth_[y] > depth_[x]) right.push_back(y = parent_[y]);
  while (x != y) {
    left.push_back(x = parent_[x]);
    right.push_back(y = parent_[y]);
  }
  right.pop_back();  // lca already in left
  left.insert(left.end(), right.rbegin(), right.rend());
  return left;
}

std::vector<int> NegativeForest::tree_path(int t, int a, int b) const {
  auto vs = tree_path_vertices(t, a, b);
  std::vector<int> out;
  out.reserve(vs.size() - 1);
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    int u = vs[i], v = vs[i + 1];
    out.push_back(parent_[u] == v ? parent_edge_[u] : parent_edge_[v]);
  }
  return out;
}

int NegativeForest::tree_distance(int a, int b) const {
  if (a == b) return 0;
  int x = a, y = b, d = 0;
  while (depth_[x] > depth_[y]) x = parent_[x], ++d;
  while (depth_[y] > depth_[x]) y = parent_[y], ++d;
  while (x != y) x = parent_[x], y = parent_[y], d += 2;
  return d;
}

namespace {

// Leaps of one tree on one path; shadow filled later by the caller.
void scan_path(const WeightedGraph& g, const NegativeForest& forest, int tree, std::span<const int> path,
               std::vector<Leap>& out) {
  int prev = -1;
  for (int i = 0; i < static_cast<int>(path.size()); ++i) {
    if (!forest.on_tree(tree, path[i])) continue;
    if (prev >= 0) {
      bool single_tree_edge = false;
      if (i == prev + 1) {
        auto e = g.edge_id(path[prev], path[i]);
        single_tree_edge = e && forest.edge_tree(*e) == tree;
      }
      if (!single_tree_edge) {
        Leap L;
        L.tree = tree;
        L.a = path[prev];
        L.b = path[i];
        L.start = prev;
        L.vertices.assign(path.begin() + prev, path.begin() + i + 1);
        L.edges = path_edge_ids(g, L.vertices);
        L.cycle_length = static_cast<int>(L.edges.size()) + forest.tree_distance(L.a, L.b);
        L.parity_changing = L.cycle_length % 2 == 1;
        out.push_back(std::move(L));
      }
    }
    prev = i;
  }
}

void fill_shadows(const WeightedGraph& g, const NegativeForest& forest, std::span<const int> scope_edges,
                  std::vector<Leap>& leaps) {
  std::vector<char> in_scope(g.m(), 0);
  for (int e : scope_edges) in_scope[e] = 1;
  for (Leap& L : leaps)
    for (int e : forest.tree_path(L.tree, L.a, L.b))
      if (in_scope[e]) L.shadow.push_back(e);
}

}  // namespace

std::vector<Leap> enumerate_leaps(const WeightedGraph& g, const NegativeForest& forest, std::span<const int> path) {
  std::vector<Leap> out;
  for (int t = 0; t < forest.size(); ++t) scan_path(g, forest, t, path, out);
  std::sort(out.begin(), out.end(), [](const Leap& x, const Leap& y) { return x.start < y.start; });
  fill_shadows(g, forest, path_edge_ids(g, path), out);
  return out;
}

std::vector<Leap> leaps_on_family(const WeightedGraph& g, const NegativeForest& forest, int tree,
                                  const std::vector<std::vector<int>>& paths) {
  std::vector<char> used(g.n(), 0);
  std::vector<int> all_edges;
  for (const auto& p : paths) {
    if (p.size() < 2) throw SolverError(Errc::InvalidInput, "path with fewer than two vertices");
    if (!forest.on_tree(tree, p.front()) || !forest.on_tree(tree, p.back()))
      throw SolverError(Errc::InvalidInput, "path endpoint not on the tree");
    for (int v : p) {
      if (!g.valid_vertex(v) || used[v]) throw SolverError(Errc::InvalidInput, "paths are not vertex-disjoint");
      used[v] = 1;
    }
    auto ids = path_edge_ids(g, p);
    all_edges.insert(all_edges.end(), ids.begin(), ids.end());
  }
  std::vector<Leap> out;
  for (const auto& p : paths) scan_path(g, forest, tree, p, out);
  fill_shadows(g, forest, all_edges, out);
  return out;
}

std::vector<Rational> redistribute_weights(const WeightedGraph& g, const NegativeForest& forest, int tree,
                                           const std::vector<std::vector<int>>& paths) {
  std::vector<Rational> wq = g.weights();
  std::vector<char> done(g.m(), 0);
  for (const Leap& L : leaps_on_family(g, forest, tree, paths)) {
    Rational len(static_cast<std::int64_t>(L.edges.size()));
    for (int f : L.shadow) {
      if (done[f]) continue;
      done[f] = 1;
      wq[f] = Rational(0);
      Rational share = g.edge(f).w / len;
      for (int e : L.edges) wq[e] += share;
    }
  }
  return wq;
}

}  // namespace oddpath
