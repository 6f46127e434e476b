#pragma once

#include <cstddef>
#include <optional>

#include "mergecut/core.hpp"

namespace mergecut {

struct BPartitionResult {
  Partition partition;
  std::size_t piece_count = 0;
  std::size_t merges = 0;      // n - piece_count
  double threshold_b = 0;
  std::size_t below_threshold = 0;  // values strictly less than b
};

// Smallest end > start with values[start..end) summing to at least b, or
// nullopt when the whole suffix falls short.
std::optional<std::size_t> minimal_b_prefix(const NumString& s, double b,
                                            std::size_t start);

// Linear-time maximum-piece b-partition: cut off minimal b-prefixes left to
// right and fold the short remainder into the last piece. Throws Infeasible
// when sum(s) < b, InvalidArgument when b <= 0.
BPartitionResult optimal_b_partition(const NumString& s, double b);

// Fewest merges turning s into a string whose every value is >= b.
MergePlan fewest_merges(const NumString& s, double b);

struct MaxMinResult {
  CutValue value;
  MergePlan plan;  // exactly k steps
};

// Integer instances only: binary search on b over [1, sum(s)] using
// optimal_b_partition as the feasibility test. Throws NonIntegerInput,
// KOutOfRange.
MaxMinResult maxmin_merge_by_search(const NumString& s, std::size_t k);

}  // namespace mergecut
