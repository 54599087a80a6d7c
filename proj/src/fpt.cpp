#include "oddpath/fpt.hpp"

#include <atomic>
#include <mutex>
#include <random>
#include <thread>

#include "oddpath/conservative.hpp"
#include "oddpath/matching.hpp"
#include "oddpath/spcop.hpp"
#include "oddpath/universal_set.hpp"

namespace oddpath {
namespace {

// labeling bit i set: negative edge i goes to F_even
PathResult solve_labeling(const WeightedGraph& g, int s, int t, const std::vector<int>& neg, std::uint64_t even) {
  ParityConstraints c;
  for (std::size_t i = 0; i < neg.size(); ++i) (even >> i & 1ULL ? c.f_even : c.f_odd).push_back(neg[i]);
  SpcopOptions opt;
  opt.check_conservative = false;
  return solve_spcop(g, s, t, c, opt);
}

template <class Label>
PathResult min_over(std::int64_t count, int threads, Label&& label_of, const WeightedGraph& g, int s, int t,
                    const std::vector<int>& neg) {
  std::mutex mu;
  PathResult best;
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  auto worker = [&]() {
    try {
      PathResult local;
      while (true) {
        std::int64_t i = next.fetch_add(1);
        if (i >= count) break;
        PathResult r = solve_labeling(g, s, t, neg, label_of(i));
        if (better_path(r, local)) local = std::move(r);
      }
      std::lock_guard<std::mutex> lock(mu);
      if (better_path(local, best)) best = std::move(local);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
      next = count;
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return best;
}

void prepare(const WeightedGraph& g, int s, int t, const FptOptions& opt) {
  require_endpoints(g, s, t);
  if (opt.check_conservative) require_conservative(g);
}

void check_mu(int mu, const FptOptions& opt) {
  if (2 * mu > opt.matching_budget)
    throw SolverError(Errc::ParameterTooLarge, "2*mu = " + std::to_string(2 * mu) + " exceeds budget " +
                                                   std::to_string(opt.matching_budget));
}

}  // namespace

int negative_matching_number(const WeightedGraph& g) { return maximum_matching_size(g, g.negative_edges()); }

PathResult solve_fpt_negedges(const WeightedGraph& g, int s, int t, const FptOptions& opt, FptStats* stats) {
  prepare(g, s, t, opt);
  auto neg = g.negative_edges();
  const int k = static_cast<int>(neg.size());
  if (k > opt.negative_guard || k > 62)
    throw SolverError(Errc::ParameterTooLarge, "|E-| = " + std::to_string(k) + " exceeds guard " +
                                                   std::to_string(opt.negative_guard));
  const std::int64_t count = std::int64_t{1} << k;
  if (stats) {
    stats->negative_edges = k;
    stats->mu = negative_matching_number(g);
    stats->calls = count;
  }
  return min_over(count, opt.threads, [](std::int64_t i) { return static_cast<std::uint64_t>(i); }, g, s, t, neg);
}

PathResult solve_fpt_randomized(const WeightedGraph& g, int s, int t, const FptOptions& opt, FptStats* stats) {
  prepare(g, s, t, opt);
  auto neg = g.negative_edges();
  if (neg.size() > 64) throw SolverError(Errc::ParameterTooLarge, "more than 64 negative edges");
  const int mu = negative_matching_number(g);
  std::int64_t trials = opt.trials;
  if (trials < 0) {
    check_mu(mu, opt);
    trials = std::int64_t{1} << (2 * mu);
  }
  if (stats) {
    stats->negative_edges = static_cast<int>(neg.size());
    stats->mu = mu;
    stats->calls = trials;
  }
  const std::uint64_t seed = opt.seed;
  const int k = static_cast<int>(neg.size());
  return min_over(
      trials, opt.threads,
      [seed, k](std::int64_t i) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) >> 32)};
        std::mt19937_64 rng(seq);
        std::uint64_t bits = 0;
        for (int j = 0; j < k; ++j)
          if (rng() >> 63) bits |= 1ULL << j;
        return bits;
      },
      g, s, t, neg);
}

PathResult solve_fpt_derandomized(const WeightedGraph& g, int s, int t, const FptOptions& opt, FptStats* stats) {
  prepare(g, s, t, opt);
  auto neg = g.negative_edges();
  if (neg.size() > 64) throw SolverError(Errc::ParameterTooLarge, "more than 64 negative edges");
  const int mu = negative_matching_number(g);
  check_mu(mu, opt);
  const int n = static_cast<int>(neg.size());
  const int k = std::min(2 * mu, n);
  UniversalSetFamily fam = build_universal_set(n, k, opt.seed);
  if (stats) {
    stats->negative_edges = n;
    stats->mu = mu;
    stats->calls = static_cast<std::int64_t>(fam.sets.size());
    stats->family_size = static_cast<std::int64_t>(fam.sets.size());
  }
  return min_over(
      static_cast<std::int64_t>(fam.sets.size()), opt.threads, [&fam](std::int64_t i) { return fam.sets[i]; }, g, s,
      t, neg);
}

}  // namespace oddpath
