#include "oddpath/generators.hpp"

#include <algorithm>
#include <numeric>

#include "oddpath/conservative.hpp"

namespace oddpath {
namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(std::mt19937_64& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

Rational positive_weight(const RandomGraphSpec& spec, std::mt19937_64& rng) {
  return Rational(uniform(rng, 0, std::max(0, spec.max_weight)));
}

Rational negative_weight(const RandomGraphSpec& spec, std::mt19937_64& rng) {
  return Rational(-uniform(rng, 1, std::max(1, spec.max_negative)));
}

// spine positions 0..4r+3 -> vertex ids 3.., pendant after them
struct Interlaced {
  int r;
  int spine(int i) const { return 3 + i; }
  int pendant() const { return 3 + 4 * r + 4; }
  int n() const { return pendant() + 1; }
  std::vector<std::pair<int, int>> leaps() const {  // spine position pairs, pendant as -1
    std::vector<std::pair<int, int>> out{{0, 5}};
    for (int i = 1; i < r; ++i) out.push_back({4 * i + 2, 4 * i + 5});
    for (int i = r - 1; i >= 1; --i) out.push_back({4 * i + 3, 4 * i});
    out.push_back({4 * r + 2, -1});
    return out;
  }
};

}  // namespace

Instance leap_example_instance() {
  Instance inst;
  inst.g = WeightedGraph(9);
  auto v = [](int i) { return i + 1; };
  const int s = 0, t = 1;
  inst.g.add_edge(v(1), v(2), -1);
  inst.g.add_edge(v(2), v(3), -1);
  inst.g.add_edge(v(3), v(4), -1);
  inst.g.add_edge(v(3), v(5), -1);
  inst.g.add_edge(v(5), v(6), -1);
  inst.g.add_edge(v(1), v(7), 2);
  inst.g.add_edge(s, v(7), 1);
  inst.g.add_edge(v(7), v(6), 2);
  inst.g.add_edge(v(6), t, 3);
  inst.g.add_edge(v(4), v(5), 3);
  inst.g.add_edge(v(4), t, 0);
  inst.g.add_edge(v(2), v(7), 1);
  inst.s = s;
  inst.t = t;
  return inst;
}

Instance constrained_example_instance(const std::vector<Rational>& weights) {
  if (!weights.empty() && weights.size() != 9)
    throw SolverError(Errc::InvalidInput, "constrained example takes 9 weights");
  Instance inst;
  inst.g = WeightedGraph(7);
  auto v = [](int i) { return i + 1; };
  const int s = 0, t = 1;
  const std::pair<int, int> list[] = {{s, v(1)},    {v(2), v(3)}, {v(4), t},    {s, v(2)},
                                      {s, v(3)},    {v(1), v(4)}, {v(4), v(5)}, {v(1), v(2)},
                                      {v(3), v(4)}};
  for (std::size_t i = 0; i < std::size(list); ++i)
    inst.g.add_edge(list[i].first, list[i].second, weights.empty() ? Rational(1) : weights[i]);
  inst.constraints.f_odd = {0, 1, 2};
  inst.constraints.f_even = {7, 8};
  inst.s = s;
  inst.t = t;
  return inst;
}

Instance interlaced_leaps_instance(int rungs) {
  if (rungs < 1) throw SolverError(Errc::InvalidInput, "need at least one rung");
  Interlaced L{rungs};
  Instance inst;
  inst.g = WeightedGraph(L.n());
  const int s = 0, t = 1, v1 = 2;
  const int last = 4 * rungs + 3;
  for (int i = 0; i < last; ++i) inst.g.add_edge(L.spine(i), L.spine(i + 1), -1);
  inst.g.add_edge(L.spine(4 * rungs), L.pendant(), -1);
  inst.g.add_edge(s, v1, 1);
  inst.g.add_edge(v1, L.spine(1), 1);
  inst.g.add_edge(t, L.spine(2), 1);
  for (auto [a, b] : L.leaps()) {
    int dist = b < 0 ? std::abs(a - 4 * rungs) + 1 : std::abs(a - b);
    inst.g.add_edge(L.spine(a), b < 0 ? L.pendant() : L.spine(b), dist);
  }
  // parity-changing leap over two spine edges
  inst.g.add_edge(L.spine(4 * rungs + 1), L.spine(last), 2);
  inst.s = s;
  inst.t = t;
  return inst;
}

std::vector<int> interlaced_leaps_path(int rungs) {
  Interlaced L{rungs};
  std::vector<int> p{0, 2, L.spine(1), L.spine(0), L.spine(5)};
  for (int i = 1; i < rungs; ++i) {
    p.push_back(L.spine(4 * i + 2));
    p.push_back(L.spine(4 * i + 5));
  }
  p.push_back(L.spine(4 * rungs + 3));
  p.push_back(L.spine(4 * rungs + 2));
  p.push_back(L.pendant());
  p.push_back(L.spine(4 * rungs));
  for (int i = rungs - 1; i >= 1; --i) {
    p.push_back(L.spine(4 * i + 3));
    p.push_back(L.spine(4 * i));
  }
  p.push_back(L.spine(3));
  p.push_back(L.spine(2));
  p.push_back(1);
  return p;
}

std::vector<int> interlaced_leaps_edges(int rungs) {
  Instance inst = interlaced_leaps_instance(rungs);
  std::vector<int> out;
  for (int e = 0; e < inst.g.m(); ++e) {
    const Edge& ed = inst.g.edge(e);
    bool spine_like = ed.w.is_negative() || ed.u < 3;
    if (!spine_like) out.push_back(e);
  }
  return out;
}

void make_conservative(WeightedGraph& g) {
  for (int round = 0;; ++round) {
    ConservativeVerdict v = validate_conservative(g);
    if (v.conservative) return;
    if (round > 100000) throw SolverError(Errc::ConservativenessViolation, "repair did not converge");
    std::vector<int> cyc = v.witness_cycle;
    cyc.push_back(cyc.front());
    auto ids = path_edge_ids(g, cyc);
    std::vector<int> pos;
    for (int e : ids)
      if (!g.edge(e).w.is_negative()) pos.push_back(e);
    if (pos.empty()) throw SolverError(Errc::ConservativenessViolation, "negative cycle of negative edges only");
    // spread the deficit, remainder to the first edge
    Rational deficit = -v.witness_weight;
    int k = static_cast<int>(pos.size());
    for (int i = 0; i < k; ++i) {
      Rational add = deficit.is_integer() ? Rational(deficit.num() / k + (i < deficit.num() % k ? 1 : 0))
                                          : deficit / Rational(k);
      g.set_weight(pos[i], g.edge(pos[i]).w + add);
    }
  }
}

Instance random_conservative(const RandomGraphSpec& spec, std::mt19937_64& rng) {
  const int n = spec.n;
  Instance inst;
  inst.g = WeightedGraph(n);
  std::vector<std::pair<int, int>> pairs;
  if (spec.connected && n > 1) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 1; i < n; ++i) pairs.push_back({perm[uniform(rng, 0, i - 1)], perm[i]});
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng, spec.edge_probability)) pairs.push_back({u, v});
  for (auto [u, v] : pairs)
    if (!inst.g.has_edge(u, v)) inst.g.add_edge(u, v, positive_weight(spec, rng));

  // random spanning forest by shuffled Kruskal
  std::vector<int> order(inst.g.m());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (int e : order) {
    int a = find(inst.g.edge(e).u), b = find(inst.g.edge(e).v);
    if (a == b) continue;
    comp[a] = b;
    if (coin(rng, spec.negative_fraction)) inst.g.set_weight(e, negative_weight(spec, rng));
  }
  make_conservative(inst.g);
  if (n >= 2) {
    inst.s = 0;
    inst.t = 1;
  }
  return inst;
}

Instance random_single_tree(const RandomGraphSpec& spec, int tree_size, std::mt19937_64& rng) {
  const int n = spec.n;
  if (n < 2) throw SolverError(Errc::InvalidInput, "need at least two vertices");
  int k = tree_size > 0 ? std::min(tree_size, n) : uniform(rng, 2, n);
  Instance inst;
  inst.g = WeightedGraph(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 1; i < k; ++i) inst.g.add_edge(perm[uniform(rng, 0, i - 1)], perm[i], negative_weight(spec, rng));
  if (spec.connected)
    for (int i = k; i < n; ++i) {
      int u = perm[uniform(rng, 0, i - 1)];
      inst.g.add_edge(u, perm[i], positive_weight(spec, rng));
    }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!inst.g.has_edge(u, v) && coin(rng, spec.edge_probability))
        inst.g.add_edge(u, v, positive_weight(spec, rng));
  make_conservative(inst.g);
  inst.s = 0;
  inst.t = 1;
  return inst;
}

Instance random_ktree(int n, int k, const RandomGraphSpec& spec, int tree_size, std::mt19937_64& rng) {
  if (k < 1 || n < k + 1) throw SolverError(Errc::InvalidInput, "k-tree needs n > k >= 1");
  Instance inst;
  inst.g = WeightedGraph(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<int>> cliques;  // (k+1)-cliques
  std::vector<int> first(perm.begin(), perm.begin() + k + 1);
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) inst.g.add_edge(first[i], first[j], positive_weight(spec, rng));
  cliques.push_back(first);
  for (int i = k + 1; i < n; ++i) {
    std::vector<int> base = cliques[uniform(rng, 0, static_cast<int>(cliques.size()) - 1)];
    base.erase(base.begin() + uniform(rng, 0, k));
    for (int u : base) inst.g.add_edge(u, perm[i], positive_weight(spec, rng));
    base.push_back(perm[i]);
    cliques.push_back(base);
  }
  // negative tree grown from a random vertex along k-tree edges
  std::vector<char> in_tree(n, 0);
  int start = uniform(rng, 0, n - 1);
  in_tree[start] = 1;
  int size = 1;
  const int want = std::min(n, std::max(1, tree_size));
  std::vector<int> frontier{start};
  while (size < want) {
    std::vector<int> cand;
    for (int v : frontier)
      for (const auto& inc : inst.g.adj(v))
        if (!in_tree[inc.to]) cand.push_back(inc.edge);
    if (cand.empty()) break;
    int e = cand[uniform(rng, 0, static_cast<int>(cand.size()) - 1)];
    const Edge& ed = inst.g.edge(e);
    int nv = in_tree[ed.u] ? ed.v : ed.u;
    in_tree[nv] = 1;
    frontier.push_back(nv);
    ++size;
    inst.g.set_weight(e, negative_weight(spec, rng));
  }
  make_conservative(inst.g);
  inst.s = perm[0];
  inst.t = perm[n - 1];
  return inst;
}

}  // namespace oddpath
