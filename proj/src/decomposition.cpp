#include "oddpath/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace oddpath {

int TreeDecomposition::width() const {
  int w = 0;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
  return w - 1;
}

int NiceDecomposition::width() const {
  int w = 0;
  for (const auto& nd : nodes) w = std::max(w, static_cast<int>(nd.bag.size()));
  return w - 1;
}

const char* nice_kind_name(NiceKind k) {
  switch (k) {
    case NiceKind::Leaf: return "leaf";
    case NiceKind::IntroduceVertex: return "introduce-vertex";
    case NiceKind::Forget: return "forget";
    case NiceKind::IntroduceEdge: return "introduce-edge";
    case NiceKind::Join: return "join";
  }
  return "?";
}

std::optional<std::string> check_decomposition(const WeightedGraph& g, const TreeDecomposition& td) {
  const int nb = static_cast<int>(td.bags.size());
  if (nb == 0) return g.n() == 0 ? std::nullopt : std::optional<std::string>("no bags");
  if (static_cast<int>(td.tree_edges.size()) != nb - 1) return "bag graph is not a tree (edge count)";
  std::vector<int> comp(nb);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= nb || b >= nb) return "tree edge names a missing bag";
    int ra = find(a), rb = find(b);
    if (ra == rb) return "bag graph has a cycle";
    comp[ra] = rb;
  }
  std::vector<std::vector<char>> in(nb, std::vector<char>(g.n(), 0));
  std::vector<int> count(g.n(), 0);
  for (int i = 0; i < nb; ++i)
    for (int v : td.bags[i]) {
      if (!g.valid_vertex(v)) return "bag holds an unknown vertex";
      if (in[i][v]) return "bag repeats a vertex";
      in[i][v] = 1;
      ++count[v];
    }
  for (int v = 0; v < g.n(); ++v)
    if (count[v] == 0) return "vertex " + std::to_string(v) + " is in no bag";
  for (int e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    bool ok = false;
    for (int i = 0; i < nb && !ok; ++i) ok = in[i][ed.u] && in[i][ed.v];
    if (!ok) return "edge " + std::to_string(ed.u) + "-" + std::to_string(ed.v) + " is in no bag";
  }
  std::vector<int> links(g.n(), 0);
  for (auto [a, b] : td.tree_edges)
    for (int v : td.bags[a])
      if (in[b][v]) ++links[v];
  for (int v = 0; v < g.n(); ++v)
    if (links[v] != count[v] - 1) return "bags holding vertex " + std::to_string(v) + " are not connected";
  return std::nullopt;
}

std::vector<int> min_fill_order(const WeightedGraph& g) {
  const int n = g.n();
  std::vector<std::set<int>> nb(n);
  for (const Edge& e : g.edges()) {
    nb[e.u].insert(e.v);
    nb[e.v].insert(e.u);
  }
  std::vector<char> done(n, 0);
  std::vector<int> order;
  auto fill = [&](int v) {
    std::int64_t f = 0;
    for (auto i = nb[v].begin(); i != nb[v].end(); ++i)
      for (auto j = std::next(i); j != nb[v].end(); ++j)
        if (!nb[*i].count(*j)) ++f;
    return f;
  };
  for (int step = 0; step < n; ++step) {
    int best = -1;
    std::int64_t bf = 0;
    for (int v = 0; v < n; ++v) {
      if (done[v]) continue;
      std::int64_t f = fill(v);
      if (best < 0 || f < bf || (f == bf && nb[v].size() < nb[best].size())) {
        best = v;
        bf = f;
      }
    }
    done[best] = 1;
    order.push_back(best);
    std::vector<int> ns(nb[best].begin(), nb[best].end());
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (std::size_t j = i + 1; j < ns.size(); ++j) {
        nb[ns[i]].insert(ns[j]);
        nb[ns[j]].insert(ns[i]);
      }
    for (int u : ns) nb[u].erase(best);
    nb[best].clear();
  }
  return order;
}

TreeDecomposition decomposition_from_order(const WeightedGraph& g, const std::vector<int>& order) {
  const int n = g.n();
  if (static_cast<int>(order.size()) != n) throw SolverError(Errc::InvalidInput, "order must list every vertex");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!g.valid_vertex(order[i]) || pos[order[i]] >= 0) throw SolverError(Errc::InvalidInput, "bad elimination order");
    pos[order[i]] = i;
  }
  std::vector<std::set<int>> nb(n);
  for (const Edge& e : g.edges()) {
    nb[e.u].insert(e.v);
    nb[e.v].insert(e.u);
  }
  TreeDecomposition td;
  td.bags.resize(n);
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> later;
    for (int u : nb[v])
      if (pos[u] > i) later.push_back(u);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        nb[later[a]].insert(later[b]);
        nb[later[b]].insert(later[a]);
      }
    td.bags[i] = later;
    td.bags[i].push_back(v);
    std::sort(td.bags[i].begin(), td.bags[i].end());
    if (!later.empty()) {
      int p = *std::min_element(later.begin(), later.end(), [&](int a, int b) { return pos[a] < pos[b]; });
      parent[i] = pos[p];
    }
  }
  int prev_root = -1;
  for (int i = 0; i < n; ++i) {
    if (parent[i] >= 0) {
      td.tree_edges.push_back({i, parent[i]});
    } else {
      if (prev_root >= 0) td.tree_edges.push_back({prev_root, i});
      prev_root = i;
    }
  }
  return td;
}

int exact_treewidth(const WeightedGraph& g, std::vector<int>* order, int max_n) {
  const int n = g.n();
  if (n > max_n || n > 30) throw SolverError(Errc::ParameterTooLarge, "exact treewidth limited to " + std::to_string(max_n) + " vertices");
  std::vector<int> heur = min_fill_order(g);
  int ub = decomposition_from_order(g, heur).width();
  if (n <= 1) {
    if (order) *order = heur;
    return std::max(0, ub);
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  // vertices outside S + v reachable from v through S
  auto q_size = [&](std::uint32_t s, int v) {
    std::uint32_t reach = adj[v], seen = 0;
    std::uint32_t frontier = reach & s;
    while (frontier) {
      seen |= frontier;
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      reach |= next;
      frontier = next & s & ~seen;
    }
    return std::popcount(reach & ~s & ~(1u << v));
  };
  struct State {
    int value;
    int last;
  };
  std::vector<std::unordered_map<std::uint32_t, State>> layers(n + 1);
  layers[0][0] = {-1, -1};
  for (int i = 0; i < n; ++i) {
    for (const auto& [s, st] : layers[i]) {
      for (int v = 0; v < n; ++v) {
        if (s >> v & 1u) continue;
        int val = std::max(st.value, q_size(s, v));
        if (val >= ub) continue;
        std::uint32_t ns = s | (1u << v);
        auto it = layers[i + 1].find(ns);
        if (it == layers[i + 1].end() || val < it->second.value) layers[i + 1][ns] = {val, v};
      }
    }
  }
  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
  auto it = layers[n].find(all);
  if (it == layers[n].end()) {
    if (order) *order = heur;
    return ub;
  }
  if (order) {
    order->assign(n, -1);
    std::uint32_t s = all;
    for (int i = n; i > 0; --i) {
      int v = layers[i].at(s).last;
      (*order)[i - 1] = v;
      s &= ~(1u << v);
    }
  }
  return it->second.value;
}

TreeDecomposition build_decomposition(const WeightedGraph& g, const DecompositionOptions& opt) {
  std::vector<int> order;
  if (opt.exact && g.n() <= opt.exact_max_n)
    exact_treewidth(g, &order, opt.exact_max_n);
  else
    order = min_fill_order(g);
  return decomposition_from_order(g, order);
}

NiceDecomposition make_nice(const WeightedGraph& g, const TreeDecomposition& td_in, int s, int t) {
  require_endpoints(g, s, t);
  TreeDecomposition td = td_in;
  const int nb = static_cast<int>(td.bags.size());
  if (nb == 0) throw SolverError(Errc::InvalidInput, "empty decomposition");
  std::vector<std::vector<int>> tadj(nb);
  for (auto [a, b] : td.tree_edges) {
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  auto holds = [&](int x, int v) { return std::binary_search(td.bags[x].begin(), td.bags[x].end(), v); };
  int root = -1;
  for (int x = 0; x < nb && root < 0; ++x)
    if (holds(x, s)) root = x;
  if (root < 0) throw SolverError(Errc::InvalidInput, "s is in no bag");
  // BFS from the root; the nearest bag with t fixes the path that receives t
  std::vector<int> parent(nb, -1), order{root};
  std::vector<char> seen(nb, 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int y : tadj[order[i]])
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[i];
        order.push_back(y);
      }
  int tnode = -1;
  for (int x : order)
    if (holds(x, t)) {
      tnode = x;
      break;
    }
  if (tnode < 0) throw SolverError(Errc::InvalidInput, "t is in no bag");
  for (int x = tnode; x != root; x = parent[x])
    if (!holds(x, t)) td.bags[x].insert(std::upper_bound(td.bags[x].begin(), td.bags[x].end(), t), t);
  if (!holds(root, t)) td.bags[root].insert(std::upper_bound(td.bags[root].begin(), td.bags[root].end(), t), t);

  NiceDecomposition nd;
  std::vector<char> introduced(g.m(), 0);
  auto add = [&](NiceNode node) {
    nd.nodes.push_back(std::move(node));
    return static_cast<int>(nd.nodes.size()) - 1;
  };
  auto intro_vertex = [&](int child, int v) {
    NiceNode node{NiceKind::IntroduceVertex, nd.nodes[child].bag, v, -1, {child}};
    node.bag.insert(std::upper_bound(node.bag.begin(), node.bag.end(), v), v);
    return add(std::move(node));
  };
  auto in_bag = [](const std::vector<int>& bag, int v) { return std::binary_search(bag.begin(), bag.end(), v); };
  auto forget = [&](int child, int v) {
    // edges at v not yet introduced: the other end is still in the bag
    for (const auto& inc : g.adj(v)) {
      if (introduced[inc.edge]) continue;
      if (!in_bag(nd.nodes[child].bag, inc.to))
        throw SolverError(Errc::Structural, "edge endpoint left the bags before the edge was introduced");
      introduced[inc.edge] = 1;
      child = add({NiceKind::IntroduceEdge, nd.nodes[child].bag, -1, inc.edge, {child}});
    }
    NiceNode node{NiceKind::Forget, nd.nodes[child].bag, v, -1, {child}};
    node.bag.erase(std::find(node.bag.begin(), node.bag.end(), v));
    return add(std::move(node));
  };
  auto transition = [&](int child, const std::vector<int>& target) {
    std::vector<int> from = nd.nodes[child].bag;
    for (int v : from)
      if (!in_bag(target, v)) child = forget(child, v);
    for (int v : target)
      if (!in_bag(nd.nodes[child].bag, v)) child = intro_vertex(child, v);
    return child;
  };
  // post-order over the rooted bag tree
  std::vector<int> built(nb, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    std::vector<int> parts;
    for (int y : tadj[x])
      if (y != parent[x]) parts.push_back(transition(built[y], td.bags[x]));
    if (parts.empty()) {
      int leaf = add({NiceKind::Leaf, {}, -1, -1, {}});
      parts.push_back(transition(leaf, td.bags[x]));
    }
    int cur = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) cur = add({NiceKind::Join, td.bags[x], -1, -1, {cur, parts[i]}});
    built[x] = cur;
  }
  std::vector<int> st{std::min(s, t), std::max(s, t)};
  int top = transition(built[root], st);
  for (int e = 0; e < g.m(); ++e)
    if (!introduced[e]) {
      const Edge& ed = g.edge(e);
      if (!in_bag(st, ed.u) || !in_bag(st, ed.v)) throw SolverError(Errc::Structural, "edge never introduced");
      introduced[e] = 1;
      top = add({NiceKind::IntroduceEdge, st, -1, e, {top}});
    }
  nd.root = top;
  return nd;
}

std::optional<std::string> check_nice(const WeightedGraph& g, const NiceDecomposition& nd, int s, int t) {
  if (nd.nodes.empty() || nd.root != static_cast<int>(nd.nodes.size()) - 1) return "root must be the last node";
  std::vector<int> st{std::min(s, t), std::max(s, t)};
  if (nd.nodes[nd.root].bag != st) return "root bag is not {s,t}";
  std::vector<int> edge_count(g.m(), 0);
  std::vector<int> parents(nd.nodes.size(), 0);
  TreeDecomposition td;
  for (std::size_t i = 0; i < nd.nodes.size(); ++i) {
    const NiceNode& x = nd.nodes[i];
    td.bags.push_back(x.bag);
    if (!std::is_sorted(x.bag.begin(), x.bag.end())) return "unsorted bag";
    for (int c : x.children) {
      if (c < 0 || c >= static_cast<int>(i)) return "child does not precede parent";
      ++parents[c];
      td.tree_edges.push_back({static_cast<int>(i), c});
    }
    auto child_bag = [&](int k) -> const std::vector<int>& { return nd.nodes[x.children[k]].bag; };
    std::string at = " at node " + std::to_string(i);
    switch (x.kind) {
      case NiceKind::Leaf:
        if (!x.children.empty() || !x.bag.empty()) return "leaf must be empty" + at;
        break;
      case NiceKind::IntroduceVertex: {
        if (x.children.size() != 1) return "introduce needs one child" + at;
        auto b = child_bag(0);
        if (std::binary_search(b.begin(), b.end(), x.vertex)) return "introduced vertex already present" + at;
        b.insert(std::upper_bound(b.begin(), b.end(), x.vertex), x.vertex);
        if (b != x.bag) return "introduce bag mismatch" + at;
        break;
      }
      case NiceKind::Forget: {
        if (x.children.size() != 1) return "forget needs one child" + at;
        auto b = child_bag(0);
        auto it = std::find(b.begin(), b.end(), x.vertex);
        if (it == b.end()) return "forgotten vertex absent" + at;
        b.erase(it);
        if (b != x.bag) return "forget bag mismatch" + at;
        break;
      }
      case NiceKind::IntroduceEdge: {
        if (x.children.size() != 1 || child_bag(0) != x.bag) return "introduce-edge shape" + at;
        if (x.edge < 0 || x.edge >= g.m()) return "bad edge id" + at;
        const Edge& e = g.edge(x.edge);
        if (!std::binary_search(x.bag.begin(), x.bag.end(), e.u) || !std::binary_search(x.bag.begin(), x.bag.end(), e.v))
          return "edge endpoints not in bag" + at;
        ++edge_count[x.edge];
        break;
      }
      case NiceKind::Join:
        if (x.children.size() != 2 || child_bag(0) != x.bag || child_bag(1) != x.bag) return "join shape" + at;
        break;
    }
  }
  for (std::size_t i = 0; i + 1 < nd.nodes.size(); ++i)
    if (parents[i] != 1) return "node " + std::to_string(i) + " has " + std::to_string(parents[i]) + " parents";
  for (int e = 0; e < g.m(); ++e)
    if (edge_count[e] != 1) return "edge " + std::to_string(e) + " introduced " + std::to_string(edge_count[e]) + " times";
  return check_decomposition(g, td);
}

std::string write_decomposition_text(const TreeDecomposition& td) {
  std::ostringstream out;
  out << "c width " << td.width() << "\n";
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i;
    for (int v : td.bags[i]) out << " " << v;
    out << "\n";
  }
  for (auto [a, b] : td.tree_edges) out << "a " << a << " " << b << "\n";
  return out.str();
}

}  // namespace oddpath
