#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "mergecut/core.hpp"

namespace mergecut {

// Exhaustive references for small instances. Enumeration refuses (TooLarge)
// rather than running past its caps.
struct OracleBudget {
  std::size_t max_n = 14;                          // string length cap
  std::size_t max_enumeration = std::size_t{1} << 16;  // subsets/partitions visited

  // max_n taken from MERGECUT_ORACLE_MAX_N when set, otherwise the default.
  static OracleBudget from_env();
};

// Max piece count over all b-partitions; nullopt when none exists.
std::optional<std::size_t> oracle_max_b_partition(const NumString& s, double b,
                                                  const OracleBudget& budget = {});

// Max over all q-piece partitions of the minimum piece sum.
CutValue oracle_maxmin_cut(const NumString& s, std::size_t q,
                           const OracleBudget& budget = {});

// Max over all j-subsets of the minimum adjacent gap. Point sets may hold up
// to max_n + 1 points (the embedding of a max_n-long string).
CutValue oracle_diversity(const PointSet& p, std::size_t j,
                          const OracleBudget& budget = {});

// Deterministic integer string with values uniform in [1, value_max].
// Generator: splitmix64 seeded with `seed`; value = 1 + (next() % value_max).
NumString gen_instance(std::uint64_t seed, std::size_t n, std::uint64_t value_max);

// The raw splitmix64 stream behind gen_instance.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish in [lo, hi] (modulo reduction).
  std::uint64_t in_range(std::uint64_t lo, std::uint64_t hi) noexcept {
    return lo + next() % (hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

}  // namespace mergecut
