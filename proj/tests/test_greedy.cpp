#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "mergecut/greedy.hpp"
#include "mergecut/oracle.hpp"

namespace mergecut {
namespace {

const std::vector<double> kIntro{3, 1, 4, 1, 5, 9, 2, 6, 5};
const std::vector<double> kTenString{5, 4, 5, 7, 1, 1, 4, 4, 5, 6};

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(MinimalBPrefix, Examples) {
  EXPECT_EQ(minimal_b_prefix(validate_string(kTenString), 10, 0), 3u);
  EXPECT_EQ(minimal_b_prefix(validate_string({5}), 5, 0), 1u);
  EXPECT_EQ(minimal_b_prefix(validate_string({1, 1, 1}), 10, 0), std::nullopt);
  EXPECT_EQ(minimal_b_prefix(validate_string({1, 1, 1}), 1, 3), std::nullopt);
  EXPECT_EQ(minimal_b_prefix(validate_string(kTenString), 10, 3), 7u);
}

TEST(OptimalBPartition, TenStringExample) {
  const BPartitionResult r = optimal_b_partition(validate_string(kTenString), 10);
  EXPECT_EQ(r.partition.cuts, (std::vector<std::size_t>{3, 7}));
  EXPECT_EQ(r.piece_count, 3u);
  EXPECT_EQ(r.merges, 7u);
  EXPECT_EQ(r.below_threshold, 10u);
}

TEST(OptimalBPartition, IntroExample) {
  const NumString s = validate_string(kIntro);
  const BPartitionResult r = optimal_b_partition(s, 5);
  EXPECT_EQ(r.piece_count, 5u);
  EXPECT_EQ(r.merges, 4u);
  const NumString merged = apply_merges(s, partition_to_merges(s, r.partition));
  EXPECT_EQ(std::vector<double>(merged.values().begin(), merged.values().end()),
            (std::vector<double>{8, 6, 9, 8, 5}));
}

TEST(OptimalBPartition, LeftoverJoinsLastPiece) {
  // 4 | 4 then remainder 1 -> 4 | 4,1
  const BPartitionResult r = optimal_b_partition(validate_string({4, 4, 1}), 4);
  EXPECT_EQ(r.partition.cuts, (std::vector<std::size_t>{1}));
}

TEST(OptimalBPartition, Errors) {
  EXPECT_EQ(code_of([] { optimal_b_partition(validate_string({2, 2, 2}), 7); }),
            ErrorCode::Infeasible);
  EXPECT_EQ(code_of([] { optimal_b_partition(validate_string({2, 2, 2}), 0); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { optimal_b_partition(validate_string({2, 2, 2}), -1); }),
            ErrorCode::InvalidArgument);
}

TEST(FewestMerges, Examples) {
  EXPECT_EQ(fewest_merges(validate_string(kIntro), 5).size(), 4u);
  EXPECT_TRUE(fewest_merges(validate_string({10, 20}), 5).steps.empty());
  // Oracle: the best 2-partition of 1,1,1,1 has two pieces -> two merges.
  const NumString ones = validate_string({1, 1, 1, 1});
  ASSERT_EQ(oracle_max_b_partition(ones, 2), 2u);
  const MergePlan plan = fewest_merges(ones, 2);
  EXPECT_EQ(plan.size(), 2u);
  EXPECT_EQ(apply_merges(ones, plan).min(), 2);
  EXPECT_EQ(code_of([] { fewest_merges(validate_string({2, 2, 2}), 7); }),
            ErrorCode::Infeasible);
}

TEST(MaxMinBySearch, Examples) {
  EXPECT_EQ(maxmin_merge_by_search(validate_string(kIntro), 3).value.value, 4);
  EXPECT_EQ(maxmin_merge_by_search(validate_string({3, 1, 2, 1, 2, 1, 3, 3}), 5).value.value, 4);
  const NumString s = validate_string(kIntro);
  const MaxMinResult all = maxmin_merge_by_search(s, 8);
  EXPECT_EQ(all.value.value, s.sum());
  EXPECT_EQ(all.plan.size(), 8u);
}

TEST(MaxMinBySearch, Errors) {
  EXPECT_EQ(code_of([] { maxmin_merge_by_search(validate_string({1.5, 2}), 1); }),
            ErrorCode::NonIntegerInput);
  EXPECT_EQ(code_of([] { maxmin_merge_by_search(validate_string({1, 2}), 2); }),
            ErrorCode::KOutOfRange);
}

TEST(MaxMinBySearch, PadsWhenGreedyOvershoots) {
  // All values equal: b = 5 already gives 6 pieces, but k = 2 needs 4.
  const NumString s = validate_string({5, 5, 5, 5, 5, 5});
  const MaxMinResult r = maxmin_merge_by_search(s, 2);
  EXPECT_EQ(r.value.value, 5);
  EXPECT_EQ(r.plan.size(), 2u);
  EXPECT_EQ(apply_merges(s, r.plan).min(), 5);
}

// Greedy count vs exhaustive enumeration.
TEST(GreedyProperties, OptimalAgainstOracle) {
  SplitMix64 rng(1);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = 1 + rng.in_range(0, 11);
    const NumString s = gen_instance(seed, n, 20);
    for (int t = 0; t < 5; ++t) {
      const double b = static_cast<double>(rng.in_range(1, static_cast<std::uint64_t>(s.sum()) + 3));
      const auto expected = oracle_max_b_partition(s, b);
      if (!expected) {
        EXPECT_THROW(optimal_b_partition(s, b), Error);
        continue;
      }
      EXPECT_EQ(optimal_b_partition(s, b).piece_count, *expected) << "seed " << seed << " b " << b;
    }
  }
}

TEST(GreedyProperties, ReversalSandwichMonotone) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const NumString s = gen_instance(seed, 1 + seed % 40, 25);
    const NumString r = s.reversed();
    std::size_t previous = s.size() + 1;
    for (double b = 1; b <= s.sum(); b += 1) {
      const BPartitionResult fwd = optimal_b_partition(s, b);
      EXPECT_EQ(fwd.piece_count, optimal_b_partition(r, b).piece_count);
      const std::size_t merges = fewest_merges(s, b).size();
      const std::size_t nb = fwd.below_threshold;
      EXPECT_LE((nb + 1) / 2, merges);
      EXPECT_LE(merges, nb);
      EXPECT_LE(fwd.piece_count, previous);
      previous = fwd.piece_count;
      for (double v : piece_sums(s, fwd.partition)) EXPECT_GE(v, b);
    }
  }
}

TEST(GreedyProperties, SearchMatchesOracleAndPlanIsExact) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const NumString s = gen_instance(seed + 5000, 1 + seed % 12, 20);
    for (std::size_t k = 0; k < s.size(); ++k) {
      const MaxMinResult r = maxmin_merge_by_search(s, k);
      EXPECT_EQ(r.value, oracle_maxmin_cut(s, s.size() - k));
      EXPECT_EQ(r.plan.size(), k);
      EXPECT_EQ(apply_merges(s, r.plan).min(), r.value.value);
    }
  }
}

}  // namespace
}  // namespace mergecut
