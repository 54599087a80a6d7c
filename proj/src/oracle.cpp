#include "oddpath/oracle.hpp"

#include <algorithm>
#include <random>

#include "oddpath/conservative.hpp"
#include "oddpath/graph_io.hpp"
#include "oddpath/negative_forest.hpp"

namespace oddpath {
namespace {

void guard(const WeightedGraph& g, int max_n) {
  if (g.n() > max_n)
    throw SolverError(Errc::ParameterTooLarge,
                      "oracle limited to " + std::to_string(max_n) + " vertices, got " + std::to_string(g.n()));
}

// plain recursive DFS over simple paths from `v` to `target`
void dfs_paths(const WeightedGraph& g, int v, int target, std::vector<char>& on, std::vector<int>& path,
               const std::function<void(const std::vector<int>&)>& visit) {
  if (v == target) {
    visit(path);
    return;
  }
  for (auto [to, e] : g.adj(v)) {
    (void)e;
    if (on[to]) continue;
    on[to] = 1;
    path.push_back(to);
    dfs_paths(g, to, target, on, path, visit);
    path.pop_back();
    on[to] = 0;
  }
}

PathResult best_of(const WeightedGraph& g, int s, int t, int max_n, const std::function<bool(const std::vector<int>&)>& keep) {
  PathResult best;
  oracle_for_each_path(
      g, s, t,
      [&](const std::vector<int>& p) {
        if (!keep(p)) return;
        PathResult r = PathResult::make(p, path_weight(g, p));
        if (better_path(r, best)) best = std::move(r);
      },
      max_n);
  return best;
}

std::string answer_of(const PathResult& r) { return r.found() ? r.weight.to_string() : "infeasible"; }

}  // namespace

void oracle_for_each_path(const WeightedGraph& g, int s, int t,
                          const std::function<void(const std::vector<int>&)>& visit, int max_n) {
  guard(g, max_n);
  require_endpoints(g, s, t);
  std::vector<char> on(g.n(), 0);
  std::vector<int> path{s};
  on[s] = 1;
  dfs_paths(g, s, t, on, path, visit);
}

PathResult oracle_odd_path(const WeightedGraph& g, int s, int t, int max_n) {
  return best_of(g, s, t, max_n, [](const std::vector<int>& p) { return p.size() % 2 == 0; });
}

PathResult oracle_even_path(const WeightedGraph& g, int s, int t, int max_n) {
  return best_of(g, s, t, max_n, [](const std::vector<int>& p) { return p.size() % 2 == 1; });
}

namespace {

bool constrained_ok(const WeightedGraph& g, const std::vector<int>& p, const std::vector<std::int8_t>& labels) {
  if (p.size() % 2 != 0) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    int e = *g.edge_id(p[i], p[i + 1]);
    bool odd_position = i % 2 == 0;  // position i+1
    if (labels[e] == 1 && odd_position) return false;
    if (labels[e] == 2 && !odd_position) return false;
  }
  return true;
}

}  // namespace

PathResult oracle_spcop(const WeightedGraph& g, int s, int t, const ParityConstraints& c, int max_n) {
  auto labels = c.labels(g.m());
  return best_of(g, s, t, max_n, [&](const std::vector<int>& p) { return constrained_ok(g, p, labels); });
}

std::vector<std::vector<int>> oracle_feasible_paths(const WeightedGraph& g, int s, int t, const ParityConstraints& c,
                                                    int max_n) {
  auto labels = c.labels(g.m());
  std::vector<std::vector<int>> out;
  oracle_for_each_path(
      g, s, t,
      [&](const std::vector<int>& p) {
        if (constrained_ok(g, p, labels)) out.push_back(p);
      },
      max_n);
  std::sort(out.begin(), out.end());
  return out;
}

DisjointPathsResult oracle_two_disjoint(const WeightedGraph& g, int s, int t, int a, int b, int max_n) {
  guard(g, max_n);
  DisjointPathsResult best;
  std::vector<char> on(g.n(), 0);
  std::vector<int> ps{s};
  on[s] = 1;
  on[t] = 1;  // P_s must avoid t
  auto try_second = [&](int end) {
    int other = end == a ? b : a;
    std::vector<char> on2 = on;
    on2[t] = 1;
    for (int v : ps) on2[v] = 1;
    if (on2[other] && other != t) return;
    auto consider = [&](const std::vector<int>& pt) {
      Rational w = path_weight(g, ps) + path_weight(g, pt);
      if (!best.found() || w < best.total_weight) {
        best.status = Status::Found;
        best.path_s = ps;
        best.path_t = pt;
        best.total_weight = w;
      }
    };
    if (other == t) {
      consider({t});
      return;
    }
    std::vector<int> pt{t};
    std::function<void(int)> go = [&](int v) {
      if (v == other) {
        consider(pt);
        return;
      }
      for (auto [to, e] : g.adj(v)) {
        (void)e;
        if (on2[to]) continue;
        on2[to] = 1;
        pt.push_back(to);
        go(to);
        pt.pop_back();
        on2[to] = 0;
      }
    };
    go(t);
  };
  std::function<void(int)> first = [&](int v) {
    if (v == a || v == b) {
      try_second(v);
      return;
    }
    for (auto [to, e] : g.adj(v)) {
      (void)e;
      if (on[to]) continue;
      on[to] = 1;
      ps.push_back(to);
      first(to);
      ps.pop_back();
      on[to] = 0;
    }
  };
  first(s);
  return best;
}

DisjointPathsResult oracle_openly_disjoint(const WeightedGraph& g, int s, int t, int max_n) {
  guard(g, max_n);
  require_endpoints(g, s, t);
  DisjointPathsResult best;
  std::vector<std::vector<int>> all;
  oracle_for_each_path(g, s, t, [&](const std::vector<int>& p) { all.push_back(p); }, max_n);
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<char> inner(g.n(), 0);
    for (std::size_t k = 1; k + 1 < all[i].size(); ++k) inner[all[i][k]] = 1;
    Rational wi = path_weight(g, all[i]);
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      bool ok = true;
      for (std::size_t k = 1; k + 1 < all[j].size() && ok; ++k) ok = !inner[all[j][k]];
      if (!ok) continue;
      Rational w = wi + path_weight(g, all[j]);
      if (!best.found() || w < best.total_weight) {
        best.status = Status::Found;
        best.path_s = all[i];
        best.path_t = all[j];
        best.total_weight = w;
      }
    }
  }
  return best;
}

OracleCycleVerdict oracle_conservative(const WeightedGraph& g, int max_n) {
  guard(g, max_n);
  OracleCycleVerdict out;
  bool have = false;
  std::vector<char> on(g.n(), 0);
  std::vector<int> path;
  std::function<void(int, int, Rational)> go = [&](int root, int v, Rational w) {
    for (auto [to, e] : g.adj(v)) {
      if (to == root && path.size() >= 3) {
        Rational cw = w + g.edge(e).w;
        if (!have || cw < out.min_weight) {
          have = true;
          out.min_weight = cw;
          out.min_cycle = path;
        }
        continue;
      }
      if (to <= root || on[to]) continue;
      on[to] = 1;
      path.push_back(to);
      go(root, to, w + g.edge(e).w);
      path.pop_back();
      on[to] = 0;
    }
  };
  for (int r = 0; r < g.n(); ++r) {
    path = {r};
    on[r] = 1;
    go(r, r, Rational(0));
    on[r] = 0;
  }
  out.conservative = !have || !out.min_weight.is_negative();
  return out;
}

std::optional<std::int64_t> oracle_min_perfect_matching(
    int n, const std::vector<std::pair<std::pair<int, int>, std::int64_t>>& edges) {
  std::vector<char> used(n, 0);
  std::optional<std::int64_t> best;
  std::function<void(std::int64_t)> go = [&](std::int64_t cur) {
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (!used[i]) {
        v = i;
        break;
      }
    if (v < 0) {
      if (!best || cur < *best) best = cur;
      return;
    }
    used[v] = 1;
    for (const auto& [uv, w] : edges) {
      int o = uv.first == v ? uv.second : uv.second == v ? uv.first : -1;
      if (o < 0 || used[o]) continue;
      used[o] = 1;
      go(cur + w);
      used[o] = 0;
    }
    used[v] = 0;
  };
  go(0);
  return best;
}

std::optional<Rational> oracle_t_join(const WeightedGraph& g, const std::vector<int>& t_set) {
  const int m = g.m();
  if (m > 22) throw SolverError(Errc::ParameterTooLarge, "T-join oracle limited to 22 edges");
  std::vector<char> want(g.n(), 0);
  for (int v : t_set) want[v] ^= 1;
  std::optional<Rational> best;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<char> deg(g.n(), 0);
    Rational w;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) {
        deg[g.edge(e).u] ^= 1;
        deg[g.edge(e).v] ^= 1;
        w += g.edge(e).w;
      }
    if (deg != want) continue;
    if (!best || w < *best) best = w;
  }
  return best;
}

int oracle_max_matching(const WeightedGraph& g, const std::vector<int>& edge_ids) {
  if (edge_ids.size() > 20) throw SolverError(Errc::ParameterTooLarge, "matching oracle limited to 20 edges");
  int best = 0;
  std::vector<char> used(g.n(), 0);
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int size) {
    best = std::max(best, size);
    if (size + static_cast<int>(edge_ids.size() - i) <= best) return;
    for (std::size_t k = i; k < edge_ids.size(); ++k) {
      const Edge& e = g.edge(edge_ids[k]);
      if (used[e.u] || used[e.v]) continue;
      used[e.u] = used[e.v] = 1;
      go(k + 1, size + 1);
      used[e.u] = used[e.v] = 0;
    }
  };
  go(0, 0);
  return best;
}

bool passes_filter(const WeightedGraph& g, SweepFilter filter) {
  switch (filter) {
    case SweepFilter::NonNegative:
      return !g.has_negative_edge();
    case SweepFilter::Conservative:
      return g.n() <= 10 ? oracle_conservative(g).conservative : validate_conservative(g).conservative;
    case SweepFilter::SingleNegativeTree: {
      if (!passes_filter(g, SweepFilter::Conservative)) return false;
      try {
        return NegativeForest::build(g).size() == 1;
      } catch (const SolverError&) {
        return false;
      }
    }
  }
  return false;
}

void sweep_instances(const SweepSpec& spec, const std::function<bool(const SweepInstance&)>& visit) {
  if (spec.palette.empty()) return;
  if (spec.min_n < 2 || spec.max_n < spec.min_n) throw SolverError(Errc::InvalidInput, "bad sweep vertex range");
  const int alphabet = static_cast<int>(spec.palette.size()) + 1;
  if (spec.exhaustive) {
    std::int64_t total = 0;
    for (int n = spec.min_n; n <= spec.max_n; ++n) {
      std::int64_t c = 1;
      for (int i = 0; i < n * (n - 1) / 2; ++i) {
        c *= alphabet;
        if (c > spec.max_instances) break;
      }
      total += c;
      if (total > spec.max_instances)
        throw SolverError(Errc::ParameterTooLarge, "exhaustive sweep exceeds max_instances");
    }
    for (int n = spec.min_n; n <= spec.max_n; ++n) {
      std::vector<std::pair<int, int>> slots;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
      std::vector<int> digit(slots.size(), 0);
      while (true) {
        SweepInstance inst{WeightedGraph(n), 0, 1};
        for (std::size_t i = 0; i < slots.size(); ++i)
          if (digit[i] > 0) inst.g.add_edge(slots[i].first, slots[i].second, spec.palette[digit[i] - 1]);
        if (!visit(inst)) return;
        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == alphabet) digit[i++] = 0;
        if (i == digit.size()) break;
      }
    }
    return;
  }
  std::mt19937_64 rng(spec.seed);
  for (std::int64_t k = 0; k < spec.samples; ++k) {
    int n = spec.min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(spec.max_n - spec.min_n + 1));
    double density = 0.3 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0;
    SweepInstance inst{WeightedGraph(n), 0, 1};
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (static_cast<double>(rng() % 1000) / 1000.0 < density)
          inst.g.add_edge(u, v, spec.palette[rng() % spec.palette.size()]);
    if (!visit(inst)) return;
  }
}

namespace {

std::vector<std::pair<std::string, std::string>> answers(const SweepInstance& inst,
                                                         const std::vector<NamedSolver>& solvers) {
  std::vector<std::pair<std::string, std::string>> out;
  out.push_back({"oracle", answer_of(oracle_odd_path(inst.g, inst.s, inst.t))});
  for (const auto& sv : solvers) {
    std::string ans;
    try {
      PathResult r = sv.solve(inst.g, inst.s, inst.t);
      ans = answer_of(r);
      if (auto err = check_odd_path(inst.g, inst.s, inst.t, r)) ans = "invalid path: " + *err;
    } catch (const SolverError& e) {
      if (e.code() == Errc::WrongSolver) continue;  // not applicable here
      ans = std::string("error: ") + e.what();
    } catch (const std::exception& e) {
      ans = std::string("error: ") + e.what();
    }
    out.push_back({sv.name, ans});
  }
  return out;
}

bool disagree(const std::vector<std::pair<std::string, std::string>>& a) {
  for (const auto& p : a)
    if (p.second != a.front().second) return true;
  return false;
}

SweepInstance without_edge(const SweepInstance& inst, int skip) {
  SweepInstance out{WeightedGraph(inst.g.n()), inst.s, inst.t};
  for (int e = 0; e < inst.g.m(); ++e)
    if (e != skip) out.g.add_edge(inst.g.edge(e).u, inst.g.edge(e).v, inst.g.edge(e).w);
  return out;
}

SweepInstance drop_isolated(const SweepInstance& inst) {
  std::vector<int> id(inst.g.n(), -1);
  int k = 0;
  for (int v = 0; v < inst.g.n(); ++v)
    if (v == inst.s || v == inst.t || inst.g.degree(v) > 0) id[v] = k++;
  SweepInstance out{WeightedGraph(k), id[inst.s], id[inst.t]};
  for (const Edge& e : inst.g.edges()) out.g.add_edge(id[e.u], id[e.v], e.w);
  return out;
}

}  // namespace

SweepReport sweep(const SweepSpec& spec, const std::vector<NamedSolver>& solvers) {
  SweepReport rep;
  sweep_instances(spec, [&](const SweepInstance& inst) {
    ++rep.generated;
    if (!passes_filter(inst.g, spec.filter)) return true;
    ++rep.checked;
    auto ans = answers(inst, solvers);
    if (!disagree(ans)) return true;
    ++rep.disagreements;
    if (!rep.first) {
      SweepInstance cur = inst;
      bool shrunk = true;
      while (shrunk) {
        shrunk = false;
        for (int e = 0; e < cur.g.m(); ++e) {
          SweepInstance cand = without_edge(cur, e);
          if (!passes_filter(cand.g, spec.filter)) continue;
          if (disagree(answers(cand, solvers))) {
            cur = std::move(cand);
            shrunk = true;
            break;
          }
        }
      }
      cur = drop_isolated(cur);
      rep.first = SweepDisagreement{cur, answers(cur, solvers)};
    }
    return true;
  });
  return rep;
}

std::string format_instance(const SweepInstance& inst) {
  Instance in;
  in.g = inst.g;
  in.s = inst.s;
  in.t = inst.t;
  return write_graph_text(in);
}

}  // namespace oddpath
