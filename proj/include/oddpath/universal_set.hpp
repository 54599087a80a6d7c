#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace oddpath {

/// Subsets of {0..n-1} as bit masks (n <= 64).
struct UniversalSetFamily {
  int n = 0;
  int k = 0;
  std::vector<std::uint64_t> sets;
};

struct UniversalCheck {
  bool ok = true;
  bool exhaustive = true;
  std::uint64_t witness_set = 0;      // S with |S| = k not shattered
  std::uint64_t missing_pattern = 0;  // subset of S that no member cuts out
};

/// Every k-subset is checked when n <= 24 and C(n,k) * |family| stays below
/// `work_limit`; otherwise `samples` random k-subsets are checked.
UniversalCheck verify_universal(const UniversalSetFamily& f, std::uint64_t seed = 1, std::int64_t samples = 20000,
                                std::int64_t work_limit = 400'000'000);

/// A verified (n,k)-universal family. Small cases use a greedy
/// conditional-expectation cover of all (S, pattern) pairs; larger ones draw
/// random families until verification passes. Never larger than the power
/// set. Throws InvalidInput unless 0 <= k <= n <= 64.
UniversalSetFamily build_universal_set(int n, int k, std::uint64_t seed = 1);

/// Number of (S, pattern) pairs the greedy cover tracks.
std::int64_t universal_pair_count(int n, int k);

}  // namespace oddpath
