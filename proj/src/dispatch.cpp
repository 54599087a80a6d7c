#include "oddpath/dispatch.hpp"

#include "oddpath/conservative.hpp"
#include "oddpath/decomposition.hpp"
#include "oddpath/fpt.hpp"
#include "oddpath/negative_forest.hpp"
#include "oddpath/oracle.hpp"
#include "oddpath/tree_solver.hpp"
#include "oddpath/treewidth.hpp"

namespace oddpath {
namespace {

const std::pair<Algorithm, const char*> kNames[] = {
    {Algorithm::Auto, "auto"},           {Algorithm::Tree, "tree"},
    {Algorithm::FptNeg, "fpt-neg"},      {Algorithm::FptRand, "fpt-rand"},
    {Algorithm::FptDerand, "fpt-derand"}, {Algorithm::Treewidth, "treewidth"},
    {Algorithm::Oracle, "oracle"},
};

}  // namespace

std::string algorithm_name(Algorithm a) {
  for (auto [k, name] : kNames)
    if (k == a) return name;
  return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  for (auto [k, n] : kNames)
    if (name == n) return k;
  return std::nullopt;
}

InstanceParameters measure(const WeightedGraph& g, bool with_width) {
  InstanceParameters p;
  p.trees = NegativeForest::build(g).size();
  p.negative_edges = static_cast<int>(g.negative_edges().size());
  p.mu = negative_matching_number(g);
  if (with_width) p.width = build_decomposition(g).width();
  return p;
}

Algorithm auto_select(const WeightedGraph& g, const Budgets& budgets, InstanceParameters* params) {
  InstanceParameters p;
  p.trees = NegativeForest::build(g).size();
  p.negative_edges = static_cast<int>(g.negative_edges().size());
  auto done = [&](Algorithm a) {
    if (params) *params = p;
    return a;
  };
  if (p.trees <= 1) return done(Algorithm::Tree);
  p.mu = negative_matching_number(g);
  if (2 * p.mu <= budgets.matching_budget) return done(Algorithm::FptDerand);
  p.width = build_decomposition(g).width() + 1;  // make_nice may add one
  if (p.width <= budgets.width_guard) return done(Algorithm::Treewidth);
  if (params) *params = p;
  throw SolverError(Errc::NoTractableAlgorithm,
                    "no algorithm within budgets: trees=" + std::to_string(p.trees) +
                        " negative_edges=" + std::to_string(p.negative_edges) + " mu=" + std::to_string(p.mu) +
                        " width_estimate=" + std::to_string(p.width));
}

SolveOutcome solve(const WeightedGraph& g, int s, int t, const SolveOptions& opt) {
  require_endpoints(g, s, t);
  require_conservative(g);
  SolveOutcome out;
  out.algorithm = opt.algorithm;
  if (out.algorithm == Algorithm::Auto) {
    InstanceParameters p;
    out.algorithm = auto_select(g, opt.budgets, &p);
    out.stats.push_back({"trees", p.trees});
    out.stats.push_back({"negative_edges", p.negative_edges});
  }
  FptOptions fo;
  fo.negative_guard = opt.budgets.negative_guard;
  fo.matching_budget = opt.budgets.matching_budget;
  fo.seed = opt.seed;
  fo.trials = opt.trials;
  fo.threads = opt.threads;
  fo.check_conservative = false;
  FptStats fs;
  auto fpt_stats = [&]() {
    out.stats.push_back({"negative_edges", fs.negative_edges});
    out.stats.push_back({"mu", fs.mu});
    out.stats.push_back({"guesses", fs.calls});
    if (fs.family_size) out.stats.push_back({"family_size", fs.family_size});
  };
  switch (out.algorithm) {
    case Algorithm::Tree: {
      TreeSolverOptions to;
      to.threads = opt.threads;
      to.check_conservative = false;
      to.disjoint.node_budget = opt.budgets.flow_budget;
      TreeSolverStats ts;
      out.result = solve_negative_tree(g, s, t, to, &ts);
      out.stats.push_back({"tree_vertices", ts.tree_vertices});
      out.stats.push_back({"pairs", ts.pairs});
      out.stats.push_back({"spcop_calls", ts.spcop_calls});
      out.stats.push_back({"second_type", ts.second_type});
      out.stats.push_back({"flow_nodes", ts.flow_nodes});
      break;
    }
    case Algorithm::FptNeg:
      out.result = solve_fpt_negedges(g, s, t, fo, &fs);
      fpt_stats();
      break;
    case Algorithm::FptRand:
      out.result = solve_fpt_randomized(g, s, t, fo, &fs);
      fpt_stats();
      break;
    case Algorithm::FptDerand:
      out.result = solve_fpt_derandomized(g, s, t, fo, &fs);
      fpt_stats();
      break;
    case Algorithm::Treewidth: {
      TreewidthOptions tw;
      tw.width_guard = opt.budgets.width_guard;
      tw.exact_width = opt.exact_width;
      tw.rank_reduce = opt.rank_reduce;
      TreewidthStats st;
      out.result = solve_treewidth(g, s, t, tw, &st);
      out.stats.push_back({"width", st.width});
      out.stats.push_back({"nodes", st.nodes});
      out.stats.push_back({"table_entries", st.table_entries});
      if (opt.rank_reduce) out.stats.push_back({"reduced_away", st.reduced_away});
      break;
    }
    case Algorithm::Oracle:
      out.result = oracle_odd_path(g, s, t, opt.budgets.oracle_max_n);
      break;
    case Algorithm::Auto:
      break;
  }
  return out;
}

}  // namespace oddpath
