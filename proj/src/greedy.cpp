#include "mergecut/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace mergecut {
namespace {

void require_positive_b(double b) {
  if (!(b > 0) || !std::isfinite(b)) {
    throw Error(ErrorCode::InvalidArgument, "threshold b must be a finite positive number");
  }
}

// Piece count of the greedy b-partition without materialising the cuts.
std::size_t greedy_piece_count(const NumString& s, double b) {
  std::size_t pieces = 0;
  double acc = 0;
  for (double v : s.values()) {
    acc += v;
    if (acc >= b) {
      ++pieces;
      acc = 0;
    }
  }
  return pieces;
}

}  // namespace

std::optional<std::size_t> minimal_b_prefix(const NumString& s, double b,
                                            std::size_t start) {
  double acc = 0;
  for (std::size_t end = start; end < s.size(); ++end) {
    acc += s[end];
    if (acc >= b) return end + 1;
  }
  return std::nullopt;
}

BPartitionResult optimal_b_partition(const NumString& s, double b) {
  require_positive_b(b);
  BPartitionResult result;
  result.threshold_b = b;
  result.below_threshold = static_cast<std::size_t>(
      std::count_if(s.values().begin(), s.values().end(),
                    [b](double v) { return v < b; }));

  std::vector<std::size_t> ends;
  std::size_t pos = 0;
  while (auto end = minimal_b_prefix(s, b, pos)) {
    ends.push_back(*end);
    pos = *end;
  }
  if (ends.empty()) {
    throw Error(ErrorCode::Infeasible, "no solution: sum of string is less than b");
  }
  // The last end is either n or is absorbed together with the short remainder.
  ends.pop_back();
  result.partition.cuts = std::move(ends);
  result.piece_count = result.partition.piece_count();
  result.merges = s.size() - result.piece_count;
  return result;
}

MergePlan fewest_merges(const NumString& s, double b) {
  return partition_to_merges(s, optimal_b_partition(s, b).partition);
}

MaxMinResult maxmin_merge_by_search(const NumString& s, std::size_t k) {
  if (!s.all_integral()) {
    throw Error(ErrorCode::NonIntegerInput,
                "binary search on b requires integer values");
  }
  const std::size_t n = s.size();
  if (k > n - 1) {
    throw Error(ErrorCode::KOutOfRange,
                "k must be in [0, " + std::to_string(n - 1) + "]");
  }
  const std::size_t target = n - k;

  // count(b) >= target is monotone in b; b = 1 is always feasible since every
  // value is at least 1.
  std::int64_t lo = 1;
  std::int64_t hi = static_cast<std::int64_t>(s.sum());
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (greedy_piece_count(s, static_cast<double>(mid)) >= target) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }

  BPartitionResult best = optimal_b_partition(s, static_cast<double>(lo));
  std::vector<std::size_t>& cuts = best.partition.cuts;
  std::size_t extra = best.piece_count - target;
  if (extra > 0) {
    const std::vector<double> sums = piece_sums(s, best.partition);
    const std::size_t largest = static_cast<std::size_t>(
        std::max_element(sums.begin(), sums.end()) - sums.begin());
    // Piece `largest` is bounded by cuts[largest-1] and cuts[largest]. It
    // absorbs right neighbours first, then left ones; it stays the largest
    // piece throughout, so the minimum is untouched.
    const std::size_t right = std::min(extra, cuts.size() - largest);
    const std::size_t left = extra - right;
    cuts.erase(cuts.begin() + static_cast<std::ptrdiff_t>(largest),
               cuts.begin() + static_cast<std::ptrdiff_t>(largest + right));
    cuts.erase(cuts.begin() + static_cast<std::ptrdiff_t>(largest - left),
               cuts.begin() + static_cast<std::ptrdiff_t>(largest));
  }

  MaxMinResult result;
  result.value = CutValue{static_cast<double>(lo)};
  result.plan = partition_to_merges(s, best.partition);
  return result;
}

}  // namespace mergecut
