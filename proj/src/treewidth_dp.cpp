#include "oddpath/treewidth.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <tuple>
#include <unordered_map>

#include "oddpath/conservative.hpp"

namespace oddpath {
namespace {

constexpr int kMaxBag = 15;
constexpr std::uint64_t kNoMate = 0xF;

struct Key {
  std::uint64_t mates;
  std::uint32_t dp;  // base-3 degrees * 2 + parity
  bool operator==(const Key& o) const { return mates == o.mates && dp == o.dp; }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = k.mates * 0x9E3779B97F4A7C15ULL ^ (static_cast<std::uint64_t>(k.dp) + 0x632BE59BD9B4E019ULL);
    h ^= h >> 29;
    return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ULL);
  }
};

struct Entry {
  Key key;
  std::int64_t w;
  int a = -1;  // child entry
  int b = -1;  // second child entry (join)
  bool took = false;
};

struct State {
  int k = 0;
  std::array<std::uint8_t, kMaxBag> deg{};
  std::array<std::uint8_t, kMaxBag> mate{};
  int parity = 0;
};

std::array<std::uint32_t, kMaxBag + 1> make_pow3() {
  std::array<std::uint32_t, kMaxBag + 1> p{};
  p[0] = 1;
  for (int i = 1; i <= kMaxBag; ++i) p[i] = p[i - 1] * 3;
  return p;
}
const auto kPow3 = make_pow3();

State decode(const Key& key, int k) {
  State s;
  s.k = k;
  s.parity = static_cast<int>(key.dp & 1u);
  std::uint32_t d = key.dp >> 1;
  for (int i = 0; i < k; ++i) {
    s.deg[i] = static_cast<std::uint8_t>(d % 3);
    d /= 3;
    s.mate[i] = static_cast<std::uint8_t>((key.mates >> (4 * i)) & kNoMate);
  }
  return s;
}

Key encode(const State& s) {
  Key key{0, 0};
  std::uint32_t d = 0;
  for (int i = s.k - 1; i >= 0; --i) d = d * 3 + s.deg[i];
  key.dp = d * 2 + static_cast<std::uint32_t>(s.parity);
  for (int i = 0; i < s.k; ++i) key.mates |= static_cast<std::uint64_t>(s.deg[i] == 1 ? s.mate[i] : kNoMate) << (4 * i);
  return key;
}

struct Table {
  std::vector<Entry> entries;
  std::unordered_map<Key, int, KeyHash> index;
  void offer(const Key& key, std::int64_t w, int a, int b, bool took) {
    auto [it, fresh] = index.try_emplace(key, static_cast<int>(entries.size()));
    if (fresh) {
      entries.push_back({key, w, a, b, took});
    } else if (w < entries[it->second].w) {
      entries[it->second] = {key, w, a, b, took};
    }
  }
};

// rows over cuts X of the degree-1 set with element 0 always inside
std::vector<int> reduce_rows(int k, const std::vector<std::vector<std::uint8_t>>& mates,
                             const std::vector<std::int64_t>& weights) {
  const int n = static_cast<int>(mates.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return weights[a] < weights[b]; });
  if (n <= 1) return order;
  if (k == 0) return {order[0]};
  const std::size_t cols = std::size_t{1} << (k - 1);
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::size_t> pivot;
  std::vector<int> kept;
  for (int idx : order) {
    std::vector<std::uint64_t> row(words, 0);
    for (std::size_t c = 0; c < cols; ++c) {
      std::uint32_t side = static_cast<std::uint32_t>(c << 1) | 1u;  // element 0 inside
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        int j = mates[idx][i];
        if (((side >> i) ^ (side >> j)) & 1u) ok = false;
      }
      if (ok) row[c / 64] |= 1ULL << (c % 64);
    }
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (row[pivot[b] / 64] >> (pivot[b] % 64) & 1ULL)
        for (std::size_t w = 0; w < words; ++w) row[w] ^= basis[b][w];
    std::size_t p = cols;
    for (std::size_t w = 0; w < words && p == cols; ++w)
      if (row[w]) p = w * 64 + static_cast<std::size_t>(__builtin_ctzll(row[w]));
    if (p == cols) continue;
    // keep the basis reduced at the new pivot
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (basis[b][p / 64] >> (p % 64) & 1ULL)
        for (std::size_t w = 0; w < words; ++w) basis[b][w] ^= row[w];
    basis.push_back(std::move(row));
    pivot.push_back(p);
    kept.push_back(idx);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

std::vector<int> reduce_representatives(int k, const std::vector<std::vector<std::pair<int, int>>>& pairings,
                                        const std::vector<Rational>& weights) {
  if (pairings.size() != weights.size()) throw SolverError(Errc::InvalidInput, "one weight per pairing");
  if (k % 2 != 0 || k > 20) throw SolverError(Errc::InvalidInput, "pairings need an even degree-1 set of size <= 20");
  std::vector<std::vector<std::uint8_t>> mates;
  for (const auto& pr : pairings) {
    std::vector<std::uint8_t> m(k, 0xFF);
    for (auto [a, b] : pr) {
      if (a < 0 || b < 0 || a >= k || b >= k || a == b || m[a] != 0xFF || m[b] != 0xFF)
        throw SolverError(Errc::InvalidInput, "not a perfect pairing");
      m[a] = static_cast<std::uint8_t>(b);
      m[b] = static_cast<std::uint8_t>(a);
    }
    if (std::count(m.begin(), m.end(), 0xFF) != 0) throw SolverError(Errc::InvalidInput, "not a perfect pairing");
    mates.push_back(std::move(m));
  }
  auto sw = scale_to_integers(weights);
  if (k == 0) {
    if (pairings.empty()) return {};
    auto best = std::min_element(sw.values.begin(), sw.values.end()) - sw.values.begin();
    return {static_cast<int>(best)};
  }
  return reduce_rows(k, mates, sw.values);
}

struct PartitionDp::Impl {
  const WeightedGraph& g;
  const NiceDecomposition& nd;
  int s, t;
  bool rank_reduce;
  ScaledWeights sw;
  std::vector<Table> tables;
  TreewidthStats stats;
  bool done = false;

  Impl(const WeightedGraph& graph, const NiceDecomposition& nice, int s_, int t_, bool rr)
      : g(graph), nd(nice), s(s_), t(t_), rank_reduce(rr) {
    auto w = g.weights();
    sw = scale_to_integers(w, static_cast<std::int64_t>(g.m()) + 2);
  }

  int pos(int node, int v) const {
    const auto& b = nd.nodes[node].bag;
    auto it = std::lower_bound(b.begin(), b.end(), v);
    return (it != b.end() && *it == v) ? static_cast<int>(it - b.begin()) : -1;
  }

  void leaf(Table& out) { out.offer(Key{0, 0}, 0, -1, -1, false); }

  void introduce(int x, Table& out) {
    const NiceNode& node = nd.nodes[x];
    const int c = node.children[0];
    const int iv = pos(x, node.vertex);
    const int kc = static_cast<int>(nd.nodes[c].bag.size());
    const auto& in = tables[c].entries;
    for (int i = 0; i < static_cast<int>(in.size()); ++i) {
      State a = decode(in[i].key, kc);
      State b;
      b.k = kc + 1;
      b.parity = a.parity;
      for (int j = 0, src = 0; j < b.k; ++j) {
        if (j == iv) continue;
        b.deg[j] = a.deg[src];
        int m = a.mate[src];
        b.mate[j] = static_cast<std::uint8_t>(a.deg[src] == 1 ? (m >= iv ? m + 1 : m) : kNoMate);
        ++src;
      }
      b.deg[iv] = 0;
      b.mate[iv] = kNoMate;
      out.offer(encode(b), in[i].w, i, -1, false);
    }
  }

  void forget(int x, Table& out) {
    const NiceNode& node = nd.nodes[x];
    const int c = node.children[0];
    const int iv = pos(c, node.vertex);
    const int kc = static_cast<int>(nd.nodes[c].bag.size());
    const auto& in = tables[c].entries;
    for (int i = 0; i < static_cast<int>(in.size()); ++i) {
      State a = decode(in[i].key, kc);
      if (a.deg[iv] == 1) continue;
      State b;
      b.k = kc - 1;
      b.parity = a.parity;
      for (int j = 0, dst = 0; j < kc; ++j) {
        if (j == iv) continue;
        b.deg[dst] = a.deg[j];
        int m = a.mate[j];
        b.mate[dst] = static_cast<std::uint8_t>(a.deg[j] == 1 ? (m > iv ? m - 1 : m) : kNoMate);
        ++dst;
      }
      out.offer(encode(b), in[i].w, i, -1, false);
    }
  }

  void introduce_edge(int x, Table& out) {
    const NiceNode& node = nd.nodes[x];
    const int c = node.children[0];
    const Edge& e = g.edge(node.edge);
    const int iu = pos(x, e.u), iv = pos(x, e.v);
    const int k = static_cast<int>(node.bag.size());
    const int is = pos(x, s), it = pos(x, t);
    const std::int64_t we = sw.values[node.edge];
    const auto& in = tables[c].entries;
    for (int i = 0; i < static_cast<int>(in.size()); ++i) {
      out.offer(in[i].key, in[i].w, i, -1, false);
      State a = decode(in[i].key, k);
      if (a.deg[iu] == 2 || a.deg[iv] == 2) continue;
      if ((iu == is || iu == it) && a.deg[iu] != 0) continue;
      if ((iv == is || iv == it) && a.deg[iv] != 0) continue;
      State b = a;
      b.parity ^= 1;
      b.deg[iu] = static_cast<std::uint8_t>(a.deg[iu] + 1);
      b.deg[iv] = static_cast<std::uint8_t>(a.deg[iv] + 1);
      if (a.deg[iu] == 0 && a.deg[iv] == 0) {
        b.mate[iu] = static_cast<std::uint8_t>(iv);
        b.mate[iv] = static_cast<std::uint8_t>(iu);
      } else if (a.deg[iu] == 1 && a.deg[iv] == 1) {
        if (a.mate[iu] == iv) continue;  // closes a cycle
        int mu = a.mate[iu], mv = a.mate[iv];
        b.mate[mu] = static_cast<std::uint8_t>(mv);
        b.mate[mv] = static_cast<std::uint8_t>(mu);
        b.mate[iu] = b.mate[iv] = kNoMate;
      } else {
        int one = a.deg[iu] == 1 ? iu : iv;
        int zero = one == iu ? iv : iu;
        int m = a.mate[one];
        b.mate[m] = static_cast<std::uint8_t>(zero);
        b.mate[zero] = static_cast<std::uint8_t>(m);
        b.mate[one] = kNoMate;
      }
      out.offer(encode(b), checked_add(in[i].w, we), i, -1, true);
    }
  }

  void join(int x, Table& out) {
    const NiceNode& node = nd.nodes[x];
    const int k = static_cast<int>(node.bag.size());
    const int is = pos(x, s), it = pos(x, t);
    const auto& L = tables[node.children[0]].entries;
    const auto& R = tables[node.children[1]].entries;
    std::vector<State> ls, rs;
    for (const auto& e : L) ls.push_back(decode(e.key, k));
    for (const auto& e : R) rs.push_back(decode(e.key, k));
    for (int i = 0; i < static_cast<int>(L.size()); ++i) {
      const State& a = ls[i];
      for (int j = 0; j < static_cast<int>(R.size()); ++j) {
        const State& b = rs[j];
        State c;
        c.k = k;
        c.parity = a.parity ^ b.parity;
        bool ok = true;
        for (int v = 0; v < k && ok; ++v) {
          int d = a.deg[v] + b.deg[v];
          if (d > 2 || ((v == is || v == it) && d > 1)) ok = false;
          c.deg[v] = static_cast<std::uint8_t>(d);
          c.mate[v] = kNoMate;
        }
        if (!ok) continue;
        std::array<char, kMaxBag> seen{};
        for (int v = 0; v < k; ++v) {
          if (c.deg[v] != 1 || seen[v]) continue;
          seen[v] = 1;
          int cur = v;
          bool left = a.deg[v] == 1;
          while (true) {
            int nx = left ? a.mate[cur] : b.mate[cur];
            seen[nx] = 1;
            if (c.deg[nx] == 1) {
              c.mate[v] = static_cast<std::uint8_t>(nx);
              c.mate[nx] = static_cast<std::uint8_t>(v);
              break;
            }
            cur = nx;
            left = !left;
          }
        }
        for (int v = 0; v < k && ok; ++v)
          if (a.deg[v] == 1 && b.deg[v] == 1 && !seen[v]) ok = false;  // cycle
        if (!ok) continue;
        out.offer(encode(c), checked_add(L[i].w, R[j].w), i, j, false);
      }
    }
  }

  void reduce(int x, Table& tab) {
    const int k = static_cast<int>(nd.nodes[x].bag.size());
    std::unordered_map<std::uint32_t, std::vector<int>> slices;
    for (int i = 0; i < static_cast<int>(tab.entries.size()); ++i) slices[tab.entries[i].key.dp].push_back(i);
    std::vector<char> keep(tab.entries.size(), 1);
    for (auto& [dp, idx] : slices) {
      if (idx.size() <= 1) continue;
      State probe = decode(tab.entries[idx[0]].key, k);
      std::vector<int> ones;
      std::array<int, kMaxBag> rank{};
      for (int v = 0; v < k; ++v)
        if (probe.deg[v] == 1) {
          rank[v] = static_cast<int>(ones.size());
          ones.push_back(v);
        }
      std::vector<std::vector<std::uint8_t>> mates;
      std::vector<std::int64_t> ws;
      for (int i : idx) {
        State st = decode(tab.entries[i].key, k);
        std::vector<std::uint8_t> m(ones.size());
        for (std::size_t r = 0; r < ones.size(); ++r) m[r] = static_cast<std::uint8_t>(rank[st.mate[ones[r]]]);
        mates.push_back(std::move(m));
        ws.push_back(tab.entries[i].w);
      }
      auto kept = reduce_rows(static_cast<int>(ones.size()), mates, ws);
      std::vector<char> mark(idx.size(), 0);
      for (int r : kept) mark[r] = 1;
      for (std::size_t r = 0; r < idx.size(); ++r)
        if (!mark[r]) keep[idx[r]] = 0;
    }
    Table out;
    for (std::size_t i = 0; i < tab.entries.size(); ++i)
      if (keep[i]) {
        out.index[tab.entries[i].key] = static_cast<int>(out.entries.size());
        out.entries.push_back(tab.entries[i]);
      } else {
        ++stats.reduced_away;
      }
    tab = std::move(out);
  }

  void run() {
    tables.assign(nd.nodes.size(), {});
    stats.nodes = static_cast<int>(nd.nodes.size());
    stats.width = nd.width();
    if (stats.width + 1 > kMaxBag) throw SolverError(Errc::ParameterTooLarge, "bag too large for the table encoding");
    for (int x = 0; x < static_cast<int>(nd.nodes.size()); ++x) {
      Table out;
      switch (nd.nodes[x].kind) {
        case NiceKind::Leaf: leaf(out); break;
        case NiceKind::IntroduceVertex: introduce(x, out); break;
        case NiceKind::Forget: forget(x, out); break;
        case NiceKind::IntroduceEdge: introduce_edge(x, out); break;
        case NiceKind::Join: join(x, out); break;
      }
      if (rank_reduce) reduce(x, out);
      out.index.clear();  // lookups are only needed while building
      stats.table_entries += static_cast<std::int64_t>(out.entries.size());
      stats.peak_entries = std::max<std::int64_t>(stats.peak_entries, static_cast<std::int64_t>(out.entries.size()));
      tables[x] = std::move(out);
    }
    done = true;
  }

  std::vector<TableEntry> table(int x) const {
    const auto& bag = nd.nodes[x].bag;
    const int k = static_cast<int>(bag.size());
    std::vector<TableEntry> out;
    for (const Entry& e : tables.at(x).entries) {
      State st = decode(e.key, k);
      TableEntry te;
      te.parity = st.parity;
      for (int i = 0; i < k; ++i) {
        te.degree.push_back(st.deg[i]);
        if (st.deg[i] == 1 && i < st.mate[i]) te.pairing.push_back({bag[i], bag[st.mate[i]]});
      }
      std::sort(te.pairing.begin(), te.pairing.end());
      te.weight = sw.to_rational(e.w);
      out.push_back(std::move(te));
    }
    return out;
  }

  PathResult answer() const {
    if (!done) throw SolverError(Errc::Structural, "dynamic program has not run");
    const int r = nd.root;
    const int is = pos(r, s), it = pos(r, t);
    State want;
    want.k = 2;
    want.parity = 1;
    want.deg[is] = want.deg[it] = 1;
    want.mate[is] = static_cast<std::uint8_t>(it);
    want.mate[it] = static_cast<std::uint8_t>(is);
    Key key = encode(want);
    int found = -1;
    const auto& root_entries = tables[r].entries;
    for (int i = 0; i < static_cast<int>(root_entries.size()); ++i)
      if (root_entries[i].key == key) found = i;
    if (found < 0) return PathResult::infeasible();
    // walk back-pointers, collecting taken edges
    std::vector<int> edges;
    std::vector<std::pair<int, int>> stack{{r, found}};
    while (!stack.empty()) {
      auto [x, i] = stack.back();
      stack.pop_back();
      const Entry& e = tables[x].entries[i];
      const NiceNode& node = nd.nodes[x];
      if (node.kind == NiceKind::IntroduceEdge && e.took) edges.push_back(node.edge);
      if (e.a >= 0) stack.push_back({node.children[0], e.a});
      if (e.b >= 0) stack.push_back({node.children[1], e.b});
    }
    std::vector<std::vector<int>> inc(g.n());
    for (int id : edges) {
      inc[g.edge(id).u].push_back(id);
      inc[g.edge(id).v].push_back(id);
    }
    std::vector<int> path{s};
    int prev_edge = -1, cur = s;
    while (cur != t) {
      int nxt_edge = -1;
      for (int id : inc[cur])
        if (id != prev_edge) nxt_edge = id;
      if (nxt_edge < 0 || path.size() > edges.size() + 1) throw SolverError(Errc::Structural, "back-pointers do not trace a path");
      cur = g.edge(nxt_edge).other(cur);
      prev_edge = nxt_edge;
      path.push_back(cur);
    }
    if (path.size() != edges.size() + 1) throw SolverError(Errc::Structural, "back-pointers leave extra edges");
    PathResult res = PathResult::make(path, path_weight(g, path));
    if (res.weight != sw.to_rational(root_entries[found].w))
      throw SolverError(Errc::Structural, "reconstructed weight differs from the table");
    return res;
  }
};

PartitionDp::PartitionDp(const WeightedGraph& g, const NiceDecomposition& nd, int s, int t, bool rank_reduce)
    : impl_(new Impl(g, nd, s, t, rank_reduce)) {}
PartitionDp::~PartitionDp() { delete impl_; }
void PartitionDp::run() { impl_->run(); }
std::vector<TableEntry> PartitionDp::table(int node) const { return impl_->table(node); }
PathResult PartitionDp::answer() const { return impl_->answer(); }
const TreewidthStats& PartitionDp::stats() const { return impl_->stats; }

std::optional<std::string> check_tables_by_enumeration(const WeightedGraph& g, const NiceDecomposition& nd, int s,
                                                       int t, const PartitionDp& dp, int max_edges) {
  if (g.m() > max_edges) return "graph too large for enumeration";
  const int nn = static_cast<int>(nd.nodes.size());
  // edges and vertices below each node
  std::vector<std::vector<char>> below_v(nn, std::vector<char>(g.n(), 0));
  std::vector<std::vector<int>> below_e(nn);
  for (int x = 0; x < nn; ++x) {
    const NiceNode& node = nd.nodes[x];
    for (int c : node.children) {
      for (int v = 0; v < g.n(); ++v) below_v[x][v] |= below_v[c][v];
      below_e[x].insert(below_e[x].end(), below_e[c].begin(), below_e[c].end());
    }
    for (int v : node.bag) below_v[x][v] = 1;
    if (node.kind == NiceKind::IntroduceEdge) below_e[x].push_back(node.edge);
    std::sort(below_e[x].begin(), below_e[x].end());
    below_e[x].erase(std::unique(below_e[x].begin(), below_e[x].end()), below_e[x].end());
  }
  for (int x = 0; x < nn; ++x) {
    const auto& bag = nd.nodes[x].bag;
    const auto& E = below_e[x];
    const int m = static_cast<int>(E.size());
    struct Best {
      Rational w;
      bool set = false;
    };
    std::map<std::tuple<std::vector<int>, int, std::vector<std::pair<int, int>>>, Best> truth;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> deg(g.n(), 0);
      std::vector<int> comp(g.n());
      for (int v = 0; v < g.n(); ++v) comp[v] = v;
      std::function<int(int)> find = [&](int v) { return comp[v] == v ? v : comp[v] = find(comp[v]); };
      bool ok = true;
      Rational w(0);
      int count = 0;
      for (int i = 0; i < m && ok; ++i) {
        if (!(mask >> i & 1u)) continue;
        const Edge& e = g.edge(E[i]);
        ++deg[e.u];
        ++deg[e.v];
        ++count;
        w += e.w;
        int a = find(e.u), b = find(e.v);
        if (a == b) ok = false;
        comp[a] = b;
      }
      if (!ok) continue;
      for (int v = 0; v < g.n() && ok; ++v) {
        if (deg[v] > 2) ok = false;
        if ((v == s || v == t) && deg[v] > 1) ok = false;
        bool in_bag = std::binary_search(bag.begin(), bag.end(), v);
        if (below_v[x][v] && !in_bag && deg[v] == 1) ok = false;
      }
      if (!ok) continue;
      std::vector<int> d;
      for (int v : bag) d.push_back(deg[v]);
      std::vector<std::pair<int, int>> pairing;
      for (std::size_t i = 0; i < bag.size(); ++i)
        for (std::size_t j = i + 1; j < bag.size(); ++j)
          if (deg[bag[i]] == 1 && deg[bag[j]] == 1 && find(bag[i]) == find(bag[j])) pairing.push_back({bag[i], bag[j]});
      auto& b = truth[{d, count % 2, pairing}];
      if (!b.set || w < b.w) b = {w, true};
    }
    auto got = dp.table(x);
    if (got.size() != truth.size())
      return "node " + std::to_string(x) + ": " + std::to_string(got.size()) + " entries, enumeration finds " +
             std::to_string(truth.size());
    for (const auto& te : got) {
      auto it = truth.find({te.degree, te.parity, te.pairing});
      if (it == truth.end()) return "node " + std::to_string(x) + ": entry has no witness";
      if (it->second.w != te.weight)
        return "node " + std::to_string(x) + ": weight " + te.weight.to_string() + " but minimum is " +
               it->second.w.to_string();
    }
  }
  return std::nullopt;
}

PathResult solve_treewidth(const WeightedGraph& g, int s, int t, const TreewidthOptions& opt, TreewidthStats* stats) {
  require_endpoints(g, s, t);
  if (opt.check_conservative) require_conservative(g);
  // the component of s, relabelled compactly
  std::vector<int> label(g.n(), -1), back;
  std::vector<int> queue{s};
  label[s] = 0;
  back.push_back(s);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& inc : g.adj(queue[i]))
      if (label[inc.to] < 0) {
        label[inc.to] = static_cast<int>(back.size());
        back.push_back(inc.to);
        queue.push_back(inc.to);
      }
  if (label[t] < 0) {
    if (stats) *stats = {};
    return PathResult::infeasible();
  }
  WeightedGraph h(static_cast<int>(back.size()));
  for (const Edge& e : g.edges())
    if (label[e.u] >= 0) h.add_edge(label[e.u], label[e.v], e.w);
  DecompositionOptions dopt;
  dopt.exact = opt.exact_width;
  TreeDecomposition td = build_decomposition(h, dopt);
  NiceDecomposition nd = make_nice(h, td, label[s], label[t]);
  const int guard = std::min(opt.width_guard, kMaxBag - 1);
  if (nd.width() > guard)
    throw SolverError(Errc::ParameterTooLarge,
                      "decomposition width " + std::to_string(nd.width()) + " exceeds guard " + std::to_string(guard));
  PartitionDp dp(h, nd, label[s], label[t], opt.rank_reduce);
  dp.run();
  PathResult r = dp.answer();
  if (stats) *stats = dp.stats();
  if (!r.found()) return r;
  for (int& v : r.vertices) v = back[v];
  return r;
}

}  // namespace oddpath
