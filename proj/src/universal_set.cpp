#include "oddpath/universal_set.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "oddpath/error.hpp"

namespace oddpath {
namespace {

constexpr long double kGreedyWorkLimit = 3e8;  // pairs * n * 2^k

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r > 9e18L ? INT64_MAX : static_cast<std::int64_t>(std::llround(r));
}

std::uint64_t full_mask(int n) { return n == 64 ? ~0ULL : ((1ULL << n) - 1); }

// next mask with the same popcount
std::uint64_t next_combination(std::uint64_t x) {
  std::uint64_t c = x & (~x + 1);
  std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

template <class F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k == 0 || k == n) {
    f(full_mask(k));
    return;
  }
  const std::uint64_t limit = full_mask(n);
  for (std::uint64_t s = (1ULL << k) - 1; s <= limit && s != 0;) {
    f(s);
    if (s == (limit & ~((1ULL << (n - k)) - 1))) break;  // highest combination
    s = next_combination(s);
  }
}

// compress A ∩ S to a k-bit pattern index
std::uint32_t pattern_of(std::uint64_t a, std::uint64_t s) {
  std::uint32_t p = 0;
  int bit = 0;
  while (s) {
    std::uint64_t low = s & (~s + 1);
    if (a & low) p |= 1u << bit;
    ++bit;
    s ^= low;
  }
  return p;
}

std::uint64_t expand_pattern(std::uint32_t p, std::uint64_t s) {
  std::uint64_t out = 0;
  int bit = 0;
  while (s) {
    std::uint64_t low = s & (~s + 1);
    if (p >> bit & 1u) out |= low;
    ++bit;
    s ^= low;
  }
  return out;
}

bool shattered(const UniversalSetFamily& f, std::uint64_t s, std::uint64_t* missing) {
  const int k = std::popcount(s);
  std::vector<char> seen(1u << k, 0);
  std::size_t count = 0;
  for (std::uint64_t a : f.sets) {
    auto p = pattern_of(a, s);
    if (!seen[p]) {
      seen[p] = 1;
      if (++count == seen.size()) return true;
    }
  }
  for (std::uint32_t p = 0; p < seen.size(); ++p)
    if (!seen[p]) {
      if (missing) *missing = expand_pattern(p, s);
      return false;
    }
  return true;
}

UniversalSetFamily power_set(int n, int k) {
  UniversalSetFamily f{n, k, {}};
  for (std::uint64_t a = 0; a < (1ULL << n); ++a) f.sets.push_back(a);
  return f;
}

// Each new member fixes elements one at a time, keeping the choice that
// maximizes the expected number of still-uncovered (S, pattern) pairs it hits.
UniversalSetFamily greedy_cover(int n, int k) {
  struct Pair {
    std::uint64_t s;
    std::uint64_t inside;  // pattern as a mask over the ground set
  };
  std::vector<Pair> open;
  for_each_k_subset(n, k, [&](std::uint64_t s) {
    for (std::uint32_t p = 0; p < (1u << k); ++p) open.push_back({s, expand_pattern(p, s)});
  });
  UniversalSetFamily f{n, k, {}};
  std::vector<double> pow2(k + 1);
  for (int i = 0; i <= k; ++i) pow2[i] = std::ldexp(1.0, -i);
  while (!open.empty()) {
    std::uint64_t a = 0, decided = 0;
    for (int e = 0; e < n; ++e) {
      const std::uint64_t bit = 1ULL << e;
      double score[2] = {0, 0};
      for (const Pair& pr : open) {
        // consistent so far?
        if (((a ^ pr.inside) & decided & pr.s) != 0) continue;
        if (!(pr.s & bit)) {
          double v = pow2[std::popcount(pr.s & ~decided)];
          score[0] += v;
          score[1] += v;
          continue;
        }
        double v = pow2[std::popcount(pr.s & ~decided & ~bit)];
        score[(pr.inside & bit) ? 1 : 0] += v;
      }
      decided |= bit;
      if (score[1] > score[0]) a |= bit;
    }
    f.sets.push_back(a);
    std::size_t w = 0;
    for (const Pair& pr : open)
      if ((a & pr.s) != pr.inside) open[w++] = pr;
    if (w == open.size()) throw SolverError(Errc::Structural, "greedy cover made no progress");
    open.resize(w);
  }
  return f;
}

}  // namespace

std::int64_t universal_pair_count(int n, int k) {
  std::int64_t c = binom(n, k);
  if (k >= 62 || c > (INT64_MAX >> k)) return INT64_MAX;
  return c << k;
}

UniversalCheck verify_universal(const UniversalSetFamily& f, std::uint64_t seed, std::int64_t samples,
                                std::int64_t work_limit) {
  UniversalCheck out;
  if (f.k < 0 || f.k > f.n || f.n > 64) {
    out.ok = false;
    return out;
  }
  const long double work = static_cast<long double>(binom(f.n, f.k)) * std::max<std::size_t>(1, f.sets.size());
  if (f.n <= 24 && work <= work_limit) {
    bool ok = true;
    for_each_k_subset(f.n, f.k, [&](std::uint64_t s) {
      if (!ok) return;
      std::uint64_t miss = 0;
      if (!shattered(f, s, &miss)) {
        ok = false;
        out.witness_set = s;
        out.missing_pattern = miss;
      }
    });
    out.ok = ok;
    return out;
  }
  out.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::vector<int> idx(f.n);
  for (int i = 0; i < f.n; ++i) idx[i] = i;
  for (std::int64_t it = 0; it < samples; ++it) {
    std::uint64_t s = 0;
    for (int i = 0; i < f.k; ++i) {
      int j = i + static_cast<int>(rng() % (f.n - i));
      std::swap(idx[i], idx[j]);
      s |= 1ULL << idx[i];
    }
    std::uint64_t miss = 0;
    if (!shattered(f, s, &miss)) {
      out.ok = false;
      out.witness_set = s;
      out.missing_pattern = miss;
      return out;
    }
  }
  return out;
}

UniversalSetFamily build_universal_set(int n, int k, std::uint64_t seed) {
  if (k < 0 || n < 0 || k > n || n > 64)
    throw SolverError(Errc::InvalidInput, "universal set needs 0 <= k <= n <= 64");
  if (k == 0) return {n, 0, {0}};
  // random families need about 2^k (ln C(n,k) + k ln 2 + 3) members
  const long double random_size =
      std::ldexp(1.0L, k) * (std::log(static_cast<long double>(std::max<std::int64_t>(1, binom(n, k)))) + k * 0.6932L + 3);
  if (n <= 20 && std::ldexp(1.0L, n) <= random_size) return power_set(n, k);
  if (static_cast<long double>(universal_pair_count(n, k)) * n * std::ldexp(1.0L, k) <= kGreedyWorkLimit) {
    UniversalSetFamily f = greedy_cover(n, k);
    if (n <= 20 && f.sets.size() >= (1ULL << n)) return power_set(n, k);
    return f;
  }
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = full_mask(n);
  for (int attempt = 0; attempt < 64; ++attempt) {
    UniversalSetFamily f{n, k, {}};
    const auto size = static_cast<std::size_t>(std::ceil(random_size * (1 + 0.25 * attempt)));
    for (std::size_t i = 0; i < size; ++i) f.sets.push_back(rng() & mask);
    if (verify_universal(f, rng()).ok) return f;
  }
  if (n <= 24) return power_set(n, k);
  throw SolverError(Errc::ParameterTooLarge, "could not build a verified universal family");
}

}  // namespace oddpath
