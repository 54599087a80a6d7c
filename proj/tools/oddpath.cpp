// Command-line front end for the shortest odd path solvers.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"
#include "json.hpp"
#include "oddpath/conservative.hpp"
#include "oddpath/decomposition.hpp"
#include "oddpath/dispatch.hpp"
#include "oddpath/generators.hpp"
#include "oddpath/graph_io.hpp"
#include "oddpath/oracle.hpp"
#include "oddpath/spcop.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace oddpath;

namespace {

enum Exit { kFound = 0, kInfeasible = 1, kInputError = 2, kGuard = 3, kInternal = 4 };

int exit_for(const SolverError& e) {
  switch (e.code()) {
    case Errc::ParameterTooLarge:
    case Errc::NoTractableAlgorithm:
      return kGuard;
    case Errc::Structural:
      return kInternal;
    default:
      return kInputError;
  }
}

json path_json(const PathResult& r) {
  json j;
  j["status"] = r.found() ? "FOUND" : "INFEASIBLE";
  if (r.found()) {
    j["weight"] = r.weight.to_string();
    j["path"] = r.vertices;
  } else {
    j["weight"] = nullptr;
    j["path"] = json::array();
  }
  return j;
}

// defaults < config file < environment < flags
struct Settings {
  Budgets budgets;
  int threads = 1;
  std::string config;

  void load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SolverError(Errc::InvalidInput, "cannot open config " + path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw SolverError(Errc::Parse, std::string("config: ") + e.what());
    }
    budgets.negative_guard = j.value("negative_guard", budgets.negative_guard);
    budgets.matching_budget = j.value("matching_budget", budgets.matching_budget);
    budgets.width_guard = j.value("width_guard", budgets.width_guard);
    budgets.flow_budget = j.value("flow_budget", budgets.flow_budget);
    budgets.oracle_max_n = j.value("oracle_max_n", budgets.oracle_max_n);
    threads = j.value("threads", threads);
  }

  template <class T>
  static void env(const char* name, T& out) {
    if (const char* v = std::getenv(name)) {
      try {
        out = static_cast<T>(std::stoll(v));
      } catch (const std::exception&) {
        throw SolverError(Errc::InvalidInput, std::string("bad value in ") + name);
      }
    }
  }

  void resolve(const Budgets& flags, const Budgets& flag_set, int flag_threads) {
    const char* cfg = std::getenv("ODDPATH_CONFIG");
    if (!config.empty())
      load_config(config);
    else if (cfg)
      load_config(cfg);
    env("ODDPATH_NEG_GUARD", budgets.negative_guard);
    env("ODDPATH_MU_BUDGET", budgets.matching_budget);
    env("ODDPATH_WIDTH_GUARD", budgets.width_guard);
    env("ODDPATH_FLOW_BUDGET", budgets.flow_budget);
    env("ODDPATH_ORACLE_MAX_N", budgets.oracle_max_n);
    env("ODDPATH_THREADS", threads);
    if (flag_set.negative_guard) budgets.negative_guard = flags.negative_guard;
    if (flag_set.matching_budget) budgets.matching_budget = flags.matching_budget;
    if (flag_set.width_guard) budgets.width_guard = flags.width_guard;
    if (flag_set.flow_budget) budgets.flow_budget = flags.flow_budget;
    if (flag_threads > 0) threads = flag_threads;
  }
};

struct Terminals {
  int s = -1;
  int t = -1;
};

std::pair<int, int> terminals(const Instance& inst, const Terminals& flags) {
  int s = flags.s >= 0 ? flags.s : inst.s.value_or(-1);
  int t = flags.t >= 0 ? flags.t : inst.t.value_or(-1);
  if (s < 0 || t < 0) throw SolverError(Errc::InvalidInput, "terminals missing: give 's'/'t' lines or --s/--t");
  require_endpoints(inst.g, s, t);
  return {s, t};
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<fs::path> corpus_files(const std::string& dir) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) throw SolverError(Errc::InvalidInput, "not a directory: " + dir);
  for (const auto& e : fs::directory_iterator(dir)) {
    auto ext = e.path().extension().string();
    if (e.is_regular_file() && (ext == ".txt" || ext == ".graph" || ext == ".json")) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact shortest odd path solvers for conservative undirected graphs"};
  app.require_subcommand(1);

  Settings settings;
  Budgets flag_budgets, flag_set{0, 0, 0, 0, 0};
  int flag_threads = 0;
  auto add_budget_flags = [&](CLI::App* sub) {
    sub->add_option("--config", settings.config, "JSON file with guard settings");
    sub->add_option_function<int>("--guard", [&](int v) { flag_budgets.negative_guard = v; flag_set.negative_guard = 1; },
                                  "max negative edges for fpt-neg");
    sub->add_option_function<int>("--mu-budget", [&](int v) { flag_budgets.matching_budget = v; flag_set.matching_budget = 1; },
                                  "max 2*mu for fpt-rand and fpt-derand");
    sub->add_option_function<int>("--width-guard", [&](int v) { flag_budgets.width_guard = v; flag_set.width_guard = 1; },
                                  "max decomposition width");
    sub->add_option_function<std::int64_t>("--flow-budget", [&](std::int64_t v) { flag_budgets.flow_budget = v; flag_set.flow_budget = 1; },
                                           "branch-and-bound nodes per disjoint-paths query");
    sub->add_option("--threads", flag_threads, "worker threads");
  };

  std::string file;
  Terminals term;
  auto add_terminal_flags = [&](CLI::App* sub) {
    sub->add_option("file", file, "graph file (text or JSON)")->required();
    sub->add_option("--s", term.s, "source vertex (overrides the file)");
    sub->add_option("--t", term.t, "target vertex (overrides the file)");
  };

  // validate
  auto* validate = app.add_subcommand("validate", "check conservativeness and report parameters");
  validate->add_option("file", file, "graph file")->required();

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "minimum-weight odd s-t path");
  add_terminal_flags(solve_cmd);
  add_budget_flags(solve_cmd);
  std::string algorithm = "auto";
  std::uint64_t seed = 1;
  std::int64_t trials = -1;
  bool exact_width = false, rank_reduce = false;
  solve_cmd->add_option("--algorithm,-a", algorithm, "auto|tree|fpt-neg|fpt-rand|fpt-derand|treewidth|oracle");
  solve_cmd->add_option("--seed", seed, "seed for fpt-rand and universal sets");
  solve_cmd->add_option("--trials", trials, "fpt-rand trial count (default 2^(2 mu))");
  solve_cmd->add_flag("--exact-width", exact_width, "exact decomposition for n <= 20");
  solve_cmd->add_flag("--rank-reduce", rank_reduce, "prune tables by GF(2) rank");

  // spcop
  auto* spcop_cmd = app.add_subcommand("spcop", "odd path under 'c even|odd' constraint lines");
  add_terminal_flags(spcop_cmd);
  bool certify = false;
  spcop_cmd->add_flag("--certify", certify, "validate the matching's dual certificate");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "print a tree decomposition");
  decompose->add_option("file", file, "graph file")->required();
  bool exact = false, nice = false;
  decompose->add_flag("--exact", exact, "exact width for n <= 20");
  decompose->add_flag("--nice", nice, "nice form rooted at {s,t}");
  decompose->add_option("--s", term.s, "source vertex");
  decompose->add_option("--t", term.t, "target vertex");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference answers");
  add_terminal_flags(oracle_cmd);
  std::string mode = "odd";
  int max_n = kOracleMaxVertices;
  oracle_cmd->add_option("--mode", mode, "odd|even|spcop|conservative|disjoint|feasible");
  oracle_cmd->add_option("--max-n", max_n, "vertex guard");
  std::vector<int> ab;
  oracle_cmd->add_option("--ab", ab, "endpoints a b for --mode disjoint")->expected(2);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "compare solvers with the oracle over generated graphs");
  SweepSpec spec;
  std::string palette = "-1,0,1", filter = "conservative", solvers = "tree,fpt-neg,fpt-derand,treewidth";
  std::int64_t samples = 0;
  sweep_cmd->add_option("--max-n", spec.max_n, "largest vertex count");
  sweep_cmd->add_option("--min-n", spec.min_n, "smallest vertex count");
  sweep_cmd->add_option("--palette", palette, "comma-separated weights");
  sweep_cmd->add_option("--filter", filter, "conservative|single-tree|nonneg");
  sweep_cmd->add_option("--solvers", solvers, "comma-separated algorithm names");
  sweep_cmd->add_option("--samples", samples, "random graphs instead of all graphs");
  sweep_cmd->add_option("--seed", spec.seed, "seed for --samples");

  // bench
  auto* bench = app.add_subcommand("bench", "time algorithms over a corpus directory, CSV out");
  std::string corpus, algorithms = "tree,treewidth", out_path;
  bench->add_option("corpus", corpus, "directory of graph files")->required();
  bench->add_option("--algorithms", algorithms, "comma-separated algorithm names");
  bench->add_option("--out,-o", out_path, "CSV file (default stdout)");
  add_budget_flags(bench);

  // generate
  auto* generate = app.add_subcommand("generate", "write generated instances");
  std::string kind = "single-tree";
  int gen_n = 20, gen_count = 1, tree_size = 0, width = 4, rungs = 2;
  std::string gen_dir;
  generate->add_option("--kind", kind, "single-tree|conservative|ktree|interlaced|leap-example|constrained-example");
  generate->add_option("--n", gen_n, "vertex count");
  generate->add_option("--count", gen_count, "number of instances");
  generate->add_option("--seed", seed, "seed");
  generate->add_option("--tree-size", tree_size, "negative tree vertices");
  generate->add_option("--width", width, "k for ktree");
  generate->add_option("--rungs", rungs, "rungs for interlaced");
  generate->add_option("--dir", gen_dir, "write files here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      Instance inst = load_instance(file);
      ConservativeVerdict v = validate_conservative(inst.g);
      json j;
      j["conservative"] = v.conservative;
      if (!v.conservative) {
        j["witness_cycle"] = v.witness_cycle;
        j["witness_weight"] = v.witness_weight.to_string();
      } else {
        InstanceParameters p = measure(inst.g);
        j["parameters"] = {{"trees", p.trees}, {"negative_edges", p.negative_edges}, {"mu", p.mu}, {"width", p.width}};
      }
      std::cout << j.dump() << "\n";
      return v.conservative ? kFound : kInfeasible;
    }

    if (solve_cmd->parsed()) {
      settings.resolve(flag_budgets, flag_set, flag_threads);
      Instance inst = load_instance(file);
      auto [s, t] = terminals(inst, term);
      SolveOptions opt;
      auto alg = parse_algorithm(algorithm);
      if (!alg) throw SolverError(Errc::InvalidInput, "unknown algorithm " + algorithm);
      opt.algorithm = *alg;
      opt.budgets = settings.budgets;
      opt.seed = seed;
      opt.trials = trials;
      opt.threads = settings.threads;
      opt.exact_width = exact_width;
      opt.rank_reduce = rank_reduce;
      auto t0 = std::chrono::steady_clock::now();
      SolveOutcome out = solve(inst.g, s, t, opt);
      double ms = ms_since(t0);
      if (out.result.found()) {
        if (auto err = check_odd_path(inst.g, s, t, out.result))
          throw SolverError(Errc::Structural, "solver returned an invalid path: " + *err);
      }
      json j = path_json(out.result);
      j["algorithm"] = algorithm_name(out.algorithm);
      json st;
      st["time_ms"] = ms;
      for (const auto& [k, v] : out.stats) st[k] = v;
      j["stats"] = st;
      std::cout << j.dump() << "\n";
      return out.result.found() ? kFound : kInfeasible;
    }

    if (spcop_cmd->parsed()) {
      Instance inst = load_instance(file);
      auto [s, t] = terminals(inst, term);
      SpcopOptions so;
      so.certify_matching = certify;
      SpcopStats st;
      PathResult r = solve_spcop(inst.g, s, t, inst.constraints, so, &st);
      json j = path_json(r);
      if (certify) j["certificate_ok"] = st.certificate_ok;
      std::cout << j.dump() << "\n";
      return r.found() ? kFound : kInfeasible;
    }

    if (decompose->parsed()) {
      Instance inst = load_instance(file);
      DecompositionOptions dopt;
      dopt.exact = exact;
      TreeDecomposition td = build_decomposition(inst.g, dopt);
      if (!nice) {
        std::cout << write_decomposition_text(td);
        return kFound;
      }
      auto [s, t] = terminals(inst, term);
      NiceDecomposition nd = make_nice(inst.g, td, s, t);
      std::cout << "c width " << nd.width() << " root " << nd.root << "\n";
      for (std::size_t i = 0; i < nd.nodes.size(); ++i) {
        const NiceNode& x = nd.nodes[i];
        std::cout << "n " << i << " " << nice_kind_name(x.kind);
        if (x.vertex >= 0) std::cout << " v=" << x.vertex;
        if (x.edge >= 0) std::cout << " e=" << x.edge;
        std::cout << " bag";
        for (int v : x.bag) std::cout << " " << v;
        std::cout << " children";
        for (int c : x.children) std::cout << " " << c;
        std::cout << "\n";
      }
      return kFound;
    }

    if (oracle_cmd->parsed()) {
      Instance inst = load_instance(file);
      json j;
      int code = kFound;
      if (mode == "conservative") {
        auto v = oracle_conservative(inst.g, max_n);
        j["conservative"] = v.conservative;
        j["min_cycle"] = v.min_cycle;
        if (!v.min_cycle.empty()) j["min_weight"] = v.min_weight.to_string();
        code = v.conservative ? kFound : kInfeasible;
      } else {
        auto [s, t] = terminals(inst, term);
        if (mode == "odd" || mode == "even" || mode == "spcop") {
          PathResult r = mode == "odd"    ? oracle_odd_path(inst.g, s, t, max_n)
                         : mode == "even" ? oracle_even_path(inst.g, s, t, max_n)
                                          : oracle_spcop(inst.g, s, t, inst.constraints, max_n);
          j = path_json(r);
          code = r.found() ? kFound : kInfeasible;
        } else if (mode == "feasible") {
          auto all = oracle_feasible_paths(inst.g, s, t, inst.constraints, max_n);
          j["paths"] = all;
          code = all.empty() ? kInfeasible : kFound;
        } else if (mode == "disjoint") {
          DisjointPathsResult r = ab.size() == 2 ? oracle_two_disjoint(inst.g, s, t, ab[0], ab[1], max_n)
                                                 : oracle_openly_disjoint(inst.g, s, t, max_n);
          j["status"] = r.found() ? "FOUND" : "INFEASIBLE";
          if (r.found()) {
            j["path_s"] = r.path_s;
            j["path_t"] = r.path_t;
            j["weight"] = r.total_weight.to_string();
          }
          code = r.found() ? kFound : kInfeasible;
        } else {
          throw SolverError(Errc::InvalidInput, "unknown oracle mode " + mode);
        }
      }
      std::cout << j.dump() << "\n";
      return code;
    }

    if (sweep_cmd->parsed()) {
      for (const auto& w : split(palette)) spec.palette.push_back(Rational::parse(w));
      if (filter == "conservative")
        spec.filter = SweepFilter::Conservative;
      else if (filter == "single-tree")
        spec.filter = SweepFilter::SingleNegativeTree;
      else if (filter == "nonneg")
        spec.filter = SweepFilter::NonNegative;
      else
        throw SolverError(Errc::InvalidInput, "unknown filter " + filter);
      if (samples > 0) {
        spec.exhaustive = false;
        spec.samples = samples;
      }
      std::vector<NamedSolver> list;
      for (const auto& name : split(solvers)) {
        auto alg = parse_algorithm(name);
        if (!alg || *alg == Algorithm::Auto) throw SolverError(Errc::InvalidInput, "unknown solver " + name);
        list.push_back({name, [a = *alg](const WeightedGraph& g, int s, int t) {
                          SolveOptions o;
                          o.algorithm = a;
                          return solve(g, s, t, o).result;
                        }});
      }
      SweepReport rep = sweep(spec, list);
      if (rep.first) {
        json d;
        d["counterexample"] = format_instance(rep.first->instance);
        for (const auto& [name, ans] : rep.first->answers) d["answers"][name] = ans;
        std::cout << d.dump() << "\n";
      }
      std::cout << json{{"generated", rep.generated}, {"checked", rep.checked}, {"disagreements", rep.disagreements}}.dump()
                << "\n";
      return rep.disagreements == 0 ? kFound : kInfeasible;
    }

    if (bench->parsed()) {
      settings.resolve(flag_budgets, flag_set, flag_threads);
      std::ofstream file_out;
      if (!out_path.empty()) {
        file_out.open(out_path);
        if (!file_out) throw SolverError(Errc::InvalidInput, "cannot write " + out_path);
      }
      std::ostream& out = out_path.empty() ? std::cout : file_out;
      out << "instance,algorithm,status,weight,time_ms,n,m,trees,negative_edges,mu,width,error\n";
      std::vector<Algorithm> algs;
      for (const auto& name : split(algorithms)) {
        auto a = parse_algorithm(name);
        if (!a) throw SolverError(Errc::InvalidInput, "unknown algorithm " + name);
        algs.push_back(*a);
      }
      for (const auto& path : corpus_files(corpus)) {
        Instance inst;
        int s = -1, t = -1;
        InstanceParameters p;
        try {
          inst = load_instance(path.string());
          std::tie(s, t) = terminals(inst, term);
          p = measure(inst.g);
        } catch (const SolverError& e) {
          // unreadable or non-conservative: one row, keep going
          out << path.filename().string() << ",,ERROR,,0,,,,,,," << errc_name(e.code()) << "\n";
          continue;
        } catch (const std::exception&) {
          out << path.filename().string() << ",,ERROR,,0,,,,,,,ARITHMETIC\n";
          continue;
        }
        for (Algorithm a : algs) {
          SolveOptions opt;
          opt.algorithm = a;
          opt.budgets = settings.budgets;
          opt.threads = settings.threads;
          std::string status, weight, error;
          auto t0 = std::chrono::steady_clock::now();
          try {
            PathResult r = solve(inst.g, s, t, opt).result;
            status = r.found() ? "FOUND" : "INFEASIBLE";
            if (r.found()) weight = r.weight.to_string();
          } catch (const SolverError& e) {
            status = "ERROR";
            error = errc_name(e.code());
          } catch (const std::exception&) {
            status = "ERROR";
            error = "ARITHMETIC";  // overflow in exact arithmetic
          }
          out << path.filename().string() << "," << algorithm_name(a) << "," << status << "," << weight << ","
              << ms_since(t0) << "," << inst.g.n() << "," << inst.g.m() << "," << p.trees << "," << p.negative_edges
              << "," << p.mu << "," << p.width << "," << error << "\n";
        }
      }
      return kFound;
    }

    if (generate->parsed()) {
      std::mt19937_64 rng(seed);
      RandomGraphSpec gs;
      gs.n = gen_n;
      gs.edge_probability = std::min(0.5, 4.0 / std::max(1, gen_n));
      if (!gen_dir.empty()) fs::create_directories(gen_dir);
      for (int i = 0; i < gen_count; ++i) {
        Instance inst;
        if (kind == "single-tree")
          inst = random_single_tree(gs, tree_size, rng);
        else if (kind == "conservative")
          inst = random_conservative(gs, rng);
        else if (kind == "ktree")
          inst = random_ktree(gen_n, width, gs, std::max(2, tree_size), rng);
        else if (kind == "interlaced")
          inst = interlaced_leaps_instance(rungs);
        else if (kind == "leap-example")
          inst = leap_example_instance();
        else if (kind == "constrained-example")
          inst = constrained_example_instance();
        else
          throw SolverError(Errc::InvalidInput, "unknown kind " + kind);
        std::string text = write_graph_text(inst);
        if (gen_dir.empty()) {
          std::cout << text;
        } else {
          std::ostringstream name;
          name << kind << "_n" << inst.g.n() << "_" << i << ".txt";
          std::ofstream(fs::path(gen_dir) / name.str()) << text;
        }
      }
      return kFound;
    }
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
