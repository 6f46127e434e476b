#include "mergecut/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <string>

namespace mergecut {
namespace {

void check_length(std::size_t n, const OracleBudget& budget) {
  if (n > budget.max_n) {
    throw Error(ErrorCode::TooLarge, "instance of length " + std::to_string(n) +
                                         " exceeds oracle cap " +
                                         std::to_string(budget.max_n));
  }
}

void check_enumeration(std::uint64_t count, const OracleBudget& budget) {
  if (count > budget.max_enumeration) {
    throw Error(ErrorCode::TooLarge, "oracle enumeration of " + std::to_string(count) +
                                         " cases exceeds its cap");
  }
}

// Piece sums induced by a mask over the n-1 interior boundaries (bit c-1 set
// means a cut before value c). Returns the minimum piece sum.
double min_piece_sum(const NumString& s, std::uint64_t mask) {
  double best = std::numeric_limits<double>::infinity();
  double acc = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && (mask >> (i - 1) & 1U)) {
      best = std::min(best, acc);
      acc = 0;
    }
    acc += s[i];
  }
  return std::min(best, acc);
}

}  // namespace

OracleBudget OracleBudget::from_env() {
  OracleBudget budget;
  if (const char* env = std::getenv("MERGECUT_ORACLE_MAX_N")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 63) {
      budget.max_n = v;
      budget.max_enumeration = std::max<std::size_t>(budget.max_enumeration,
                                                     std::size_t{1} << (v + 1));
    }
  }
  return budget;
}

std::optional<std::size_t> oracle_max_b_partition(const NumString& s, double b,
                                                  const OracleBudget& budget) {
  const std::size_t n = s.size();
  check_length(n, budget);
  const std::uint64_t masks = std::uint64_t{1} << (n - 1);
  check_enumeration(masks, budget);
  std::optional<std::size_t> best;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    if (min_piece_sum(s, mask) >= b) {
      const std::size_t pieces = static_cast<std::size_t>(std::popcount(mask)) + 1;
      if (!best || pieces > *best) best = pieces;
    }
  }
  return best;
}

CutValue oracle_maxmin_cut(const NumString& s, std::size_t q, const OracleBudget& budget) {
  const std::size_t n = s.size();
  check_length(n, budget);
  if (q < 1 || q > n) {
    throw Error(ErrorCode::QOutOfRange, "piece count out of range");
  }
  const std::uint64_t masks = std::uint64_t{1} << (n - 1);
  check_enumeration(masks, budget);
  double best = -1;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != q - 1) continue;
    best = std::max(best, min_piece_sum(s, mask));
  }
  return CutValue{best};
}

CutValue oracle_diversity(const PointSet& p, std::size_t j, const OracleBudget& budget) {
  const std::size_t m = p.size();
  check_length(m == 0 ? 0 : m - 1, budget);
  if (j < 2 || j > m) {
    throw Error(ErrorCode::TooFewPoints, "subset size must be in [2, number of points]");
  }
  const std::uint64_t masks = std::uint64_t{1} << m;
  check_enumeration(masks, budget);
  double best = -1;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != j) continue;
    double gap = std::numeric_limits<double>::infinity();
    double last = 0;
    bool have_last = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1U)) continue;
      if (have_last) gap = std::min(gap, p[i] - last);
      last = p[i];
      have_last = true;
    }
    best = std::max(best, gap);
  }
  return CutValue{best};
}

NumString gen_instance(std::uint64_t seed, std::size_t n, std::uint64_t value_max) {
  if (n < 1 || value_max < 1) {
    throw Error(ErrorCode::InvalidArgument, "gen_instance needs n >= 1 and value_max >= 1");
  }
  SplitMix64 rng(seed);
  std::vector<double> values(n);
  for (double& v : values) v = static_cast<double>(rng.in_range(1, value_max));
  return NumString(std::move(values));
}

}  // namespace mergecut
