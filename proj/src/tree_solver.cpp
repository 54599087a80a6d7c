#include "oddpath/tree_solver.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "oddpath/conservative.hpp"
#include "oddpath/spcop.hpp"

namespace oddpath {

SecondTypeCandidate assemble_second_type(const WeightedGraph& g, const std::vector<int>& leap,
                                         const DisjointPathsResult& dp, const NegativeForest& forest, int tree) {
  if (!dp.found() || leap.size() < 2) throw SolverError(Errc::InvalidInput, "second type needs a leap and two paths");
  const int a = leap.front(), b = leap.back();
  SecondTypeCandidate out;
  CycleCut& cut = out.cut;
  cut.cycle = leap;
  auto back = forest.tree_path_vertices(tree, b, a);
  cut.cycle.insert(cut.cycle.end(), back.begin() + 1, back.end() - 1);
  const int len = static_cast<int>(cut.cycle.size());
  if (len % 2 != 1) throw SolverError(Errc::Structural, "leap is not parity-changing");
  std::vector<int> pos(g.n(), -1);
  for (int i = 0; i < len; ++i) pos[cut.cycle[i]] = i;

  auto first_on_cycle = [&](const std::vector<int>& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (pos[p[i]] >= 0) return i;
    throw SolverError(Errc::Structural, "disjoint path never meets the cycle");
  };
  std::size_t ix = first_on_cycle(dp.path_s);
  std::size_t iy = first_on_cycle(dp.path_t);
  cut.x = dp.path_s[ix];
  cut.y = dp.path_t[iy];
  if (cut.x == cut.y) throw SolverError(Errc::Structural, "cut vertices coincide");

  int px = pos[cut.x], py = pos[cut.y];
  for (int i = px;; i = (i + 1) % len) {
    cut.c1.push_back(cut.cycle[i]);
    if (i == py) break;
  }
  for (int i = px;; i = (i - 1 + len) % len) {
    cut.c2.push_back(cut.cycle[i]);
    if (i == py) break;
  }
  auto join = [&](const std::vector<int>& arc) {
    std::vector<int> p(dp.path_s.begin(), dp.path_s.begin() + ix);
    p.insert(p.end(), arc.begin(), arc.end());
    for (std::size_t i = iy; i-- > 0;) p.push_back(dp.path_t[i]);
    return p;
  };
  out.s1 = join(cut.c1);
  out.s2 = join(cut.c2);
  out.w1 = path_weight(g, out.s1);
  out.w2 = path_weight(g, out.s2);
  bool odd1 = out.s1.size() % 2 == 0;
  bool odd2 = out.s2.size() % 2 == 0;
  if (odd1 == odd2) throw SolverError(Errc::Structural, "exactly one assembled path must be odd");
  out.chosen = odd1 ? PathResult::make(out.s1, out.w1) : PathResult::make(out.s2, out.w2);
  return out;
}

PathResult solve_negative_tree(const WeightedGraph& g, int s, int t, const TreeSolverOptions& opt,
                               TreeSolverStats* stats) {
  require_endpoints(g, s, t);
  if (opt.check_conservative) require_conservative(g);
  NegativeForest forest = NegativeForest::build(g);
  if (forest.size() >= 2)
    throw SolverError(Errc::WrongSolver,
                      "negative edges form " + std::to_string(forest.size()) + " trees; use fpt or treewidth");
  if (forest.empty()) return shortest_odd_path_nonneg(g, s, t);

  const NegativeTree& tree = forest.tree(0);
  const auto& tv = tree.vertices;
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < tv.size(); ++i)
    for (std::size_t j = i + 1; j < tv.size(); ++j) pairs.push_back({tv[i], tv[j]});

  SpcopOptions sopt;
  sopt.check_conservative = false;

  std::mutex mu;
  PathResult best;
  TreeSolverStats local;
  local.tree_vertices = static_cast<int>(tv.size());
  local.pairs = static_cast<int>(pairs.size());

  auto offer = [&](const PathResult& r) {
    if (!r.found()) return;
    std::lock_guard<std::mutex> lock(mu);
    if (better_path(r, best)) best = r;
  };

  auto work = [&](int a, int b) {
    // first type
    auto tp = forest.tree_path(0, a, b);
    std::vector<char> keep(g.m(), 1);
    for (int e : tree.edges) keep[e] = 0;
    for (int e : tp) keep[e] = 1;
    ParityConstraints c1, c2;
    for (std::size_t i = 0; i < tp.size(); ++i) {
      // sqn from a is i+1
      bool even = (i + 1) % 2 == 0;
      (even ? c1.f_even : c1.f_odd).push_back(tp[i]);
      (even ? c2.f_odd : c2.f_even).push_back(tp[i]);
    }
    Subgraph sub = filter_graph(g, keep);
    auto remap = [&](const ParityConstraints& c) {
      std::vector<int> to_sub(g.m(), -1);
      for (int i = 0; i < sub.graph.m(); ++i) to_sub[sub.edge_map[i]] = i;
      ParityConstraints r;
      for (int e : c.f_even) r.f_even.push_back(to_sub[e]);
      for (int e : c.f_odd) r.f_odd.push_back(to_sub[e]);
      return r;
    };
    offer(solve_spcop(sub.graph, s, t, remap(c1), sopt));
    offer(solve_spcop(sub.graph, s, t, remap(c2), sopt));

    // second type
    PathResult leap = parity_changing_leap_min(g, forest, 0, a, b);
    if (!leap.found()) return std::pair<int, std::int64_t>{2, 0};
    DisjointPathsStats dstats;
    DisjointPathsResult dp = two_disjoint_paths(g, s, t, a, b, opt.disjoint, &dstats);
    if (!dp.found()) return std::pair<int, std::int64_t>{2, dstats.nodes};
    SecondTypeCandidate cand = assemble_second_type(g, leap.vertices, dp, forest, 0);
    if (opt.trace) opt.trace({a, b, leap, dp, cand});
    offer(cand.chosen);
    return std::pair<int, std::int64_t>{3, dstats.nodes};
  };

  std::atomic<std::size_t> next{0};
  std::atomic<int> second{0};
  std::atomic<std::int64_t> flow_nodes{0};
  std::exception_ptr failure;
  auto worker = [&]() {
    try {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= pairs.size()) break;
        auto [kind, nodes] = work(pairs[i].first, pairs[i].second);
        if (kind == 3) ++second;
        flow_nodes += nodes;
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
      next = pairs.size();
    }
  };
  int threads = std::max(1, opt.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  if (stats) {
    *stats = local;
    stats->spcop_calls = 2 * local.pairs;
    stats->second_type = second;
    stats->flow_nodes = flow_nodes;
  }
  return best;
}

}  // namespace oddpath
