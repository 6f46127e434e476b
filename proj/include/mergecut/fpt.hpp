#pragma once

#include <cstddef>
#include <vector>

#include "mergecut/core.hpp"

namespace mergecut {

struct KeptEntry {
  std::size_t index = 0;  // position in the original string
  double value = 0;
  bool left_mergeable = false;   // original left neighbour is also kept
  bool right_mergeable = false;  // original right neighbour is also kept

  friend bool operator==(const KeptEntry&, const KeptEntry&) = default;
};

// The part of a string that k merges can touch: the 2k smallest values
// (ordered by value, then index) and their immediate neighbours. Everything
// else is folded into removed_min.
struct ReducedInstance {
  std::vector<KeptEntry> kept;
  double removed_min = 0;  // +inf when nothing was removed
};

// Throws KOutOfRange unless 1 <= k <= n-1. Strings with n <= 4k are kept
// whole.
ReducedInstance reduce_instance(const NumString& s, std::size_t k);

struct FptOptions {
  bool parallel = false;
  // Subtrees above this depth are spawned as tasks when parallel.
  std::size_t task_depth = 6;
  bool reduce = true;
  // Verify at every node that the heap holds exactly the current values.
  bool check_heap = false;
};

struct FptResult {
  CutValue value;
  MergePlan plan;  // exactly k steps against the original string
  std::size_t nodes = 0;
};

// Bounded search tree of depth k: the current minimum is merged either with
// its left or its right neighbour. Among equally good leaves the first in
// left-branch-first order wins, so the result does not depend on
// scheduling. Throws KOutOfRange unless 0 <= k <= n-1.
FptResult maxmin_merge_fpt(const NumString& s, std::size_t k,
                           const FptOptions& options = {});

}  // namespace mergecut
