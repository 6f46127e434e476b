#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <vector>

#include "mergecut/core.hpp"
#include "mergecut/oracle.hpp"

namespace mergecut {
namespace {

const std::vector<double> kIntro{3, 1, 4, 1, 5, 9, 2, 6, 5};

std::vector<double> values_of(const NumString& s) { return {s.values().begin(), s.values().end()}; }

Partition random_partition(SplitMix64& rng, std::size_t n) {
  Partition p;
  for (std::size_t c = 1; c < n; ++c) {
    if (rng.next() & 1U) p.cuts.push_back(c);
  }
  return p;
}

TEST(ValidateString, AcceptsPositiveValues) {
  EXPECT_EQ(validate_string(kIntro).size(), 9u);
  const NumString one = validate_string({5});
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(one.min(), 5);
  EXPECT_EQ(one.sum(), 5);
}

TEST(ValidateString, RejectsZeroWithIndex) {
  try {
    validate_string({3, 0, 4});
    FAIL() << "expected NonPositiveValue";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPositiveValue);
    ASSERT_TRUE(e.index().has_value());
    EXPECT_EQ(*e.index(), 1u);
  }
}

TEST(ValidateString, RejectsEmptyNegativeAndNonFinite) {
  EXPECT_THROW(validate_string({}), Error);
  EXPECT_THROW(validate_string({1, -2}), Error);
  EXPECT_THROW(validate_string({std::numeric_limits<double>::infinity()}), Error);
  EXPECT_THROW(validate_string({std::numeric_limits<double>::quiet_NaN()}), Error);
}

TEST(ToPoints, PrefixSums) {
  const PointSet p = to_points(validate_string({3, 1, 2, 1, 2, 1, 3, 3}));
  EXPECT_EQ(std::vector<double>(p.points().begin(), p.points().end()),
            (std::vector<double>{0, 3, 4, 6, 7, 9, 10, 13, 16}));
  const PointSet single = to_points(validate_string({5}));
  EXPECT_EQ(std::vector<double>(single.points().begin(), single.points().end()),
            (std::vector<double>{0, 5}));
  const PointSet intro = to_points(validate_string(kIntro));
  EXPECT_EQ(std::vector<double>(intro.points().begin(), intro.points().end()),
            (std::vector<double>{0, 3, 4, 8, 9, 14, 23, 25, 31, 36}));
}

TEST(PointSet, RejectsDuplicates) {
  EXPECT_THROW(PointSet({0, 1, 1, 2}), Error);
  EXPECT_THROW(PointSet({}), Error);
}

TEST(PartitionToMerges, IntroExample) {
  const NumString s = validate_string(kIntro);
  const MergePlan plan = partition_to_merges(s, Partition{{3, 5, 6, 8}});
  EXPECT_EQ(plan.size(), 4u);
  EXPECT_EQ(plan.steps, (std::vector<std::size_t>{0, 0, 1, 3}));
  EXPECT_EQ(values_of(apply_merges(s, plan)), (std::vector<double>{8, 6, 9, 8, 5}));
}

TEST(PartitionToMerges, TrivialCases) {
  EXPECT_TRUE(partition_to_merges(validate_string({7}), Partition{}).steps.empty());
  const NumString s = validate_string({1, 2, 3});
  const MergePlan all = partition_to_merges(s, Partition{});
  EXPECT_EQ(all.size(), 2u);
  EXPECT_EQ(values_of(apply_merges(s, all)), (std::vector<double>{6}));
}

TEST(PartitionToMerges, RejectsBadCuts) {
  const NumString s = validate_string({1, 2, 3});
  EXPECT_THROW(partition_to_merges(s, Partition{{0}}), Error);
  EXPECT_THROW(partition_to_merges(s, Partition{{3}}), Error);
  EXPECT_THROW(partition_to_merges(s, Partition{{2, 1}}), Error);
  EXPECT_THROW(partition_to_merges(s, Partition{{1, 1}}), Error);
}

TEST(MergesToPartition, IntroExample) {
  const NumString s = validate_string(kIntro);
  const MergePlan plan{{0, 1, 4}};
  EXPECT_EQ(values_of(apply_merges(s, plan)), (std::vector<double>{4, 5, 5, 9, 8, 5}));
  EXPECT_EQ(merges_to_partition(s, plan).cuts, (std::vector<std::size_t>{2, 4, 5, 6, 8}));
}

TEST(MergesToPartition, TwoElements) {
  const Partition p = merges_to_partition(validate_string({1, 2}), MergePlan{{0}});
  EXPECT_TRUE(p.cuts.empty());
  EXPECT_EQ(p.piece_count(), 1u);
}

TEST(MergesToPartition, AcceptsAnyOrder) {
  const NumString s = validate_string({1, 2, 3, 4});
  // Right-to-left inside one piece still yields a single piece.
  EXPECT_TRUE(merges_to_partition(s, MergePlan{{2, 1, 0}}).cuts.empty());
  EXPECT_EQ(merges_to_partition(s, MergePlan{{2}}).cuts, (std::vector<std::size_t>{1, 2}));
}

TEST(ApplyMerges, IdentityAndConservation) {
  const NumString s = validate_string(kIntro);
  EXPECT_EQ(apply_merges(s, MergePlan{}), s);
  EXPECT_EQ(values_of(apply_merges(validate_string({1, 1, 1}), MergePlan{{0, 0}})),
            (std::vector<double>{3}));
}

TEST(ApplyMerges, RejectsOutOfRangeStep) {
  const NumString s = validate_string({1, 1, 1});
  try {
    apply_merges(s, MergePlan{{0, 1}});
    FAIL() << "expected InvalidPlan";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidPlan);
    EXPECT_EQ(*e.index(), 1u);
  }
  EXPECT_THROW(apply_merges(s, MergePlan{{0, 0, 0}}), Error);
}

TEST(PieceSums, Examples) {
  EXPECT_EQ(piece_sums(validate_string({3, 1, 2, 1, 2, 1, 3, 3}), Partition{{2, 5}}),
            (std::vector<double>{4, 5, 7}));
  EXPECT_EQ(piece_sums(validate_string(kIntro), Partition{}), (std::vector<double>{36}));
  EXPECT_EQ(piece_sums(validate_string({5, 4, 5, 7, 1, 1, 4, 4, 5, 6}), Partition{{3, 7}}),
            (std::vector<double>{14, 13, 15}));
}

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(format_number(8), "8");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.3333333333333333");
}

// Partition <-> plan bijection and piece/merge counts.
TEST(CoreProperties, PartitionPlanRoundTrip) {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.in_range(0, 20);
    const NumString s = gen_instance(rng.next(), n, 50);
    const Partition p = random_partition(rng, n);
    const MergePlan plan = partition_to_merges(s, p);
    EXPECT_EQ(plan.size() + p.piece_count(), n);
    EXPECT_EQ(merges_to_partition(s, plan), p);
    EXPECT_EQ(values_of(apply_merges(s, plan)), piece_sums(s, p));
  }
}

// Any plan order is accepted and canonicalises to the same merged string.
TEST(CoreProperties, RandomPlansCanonicalise) {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.in_range(0, 15);
    const NumString s = gen_instance(rng.next(), n, 30);
    MergePlan plan;
    const std::size_t k = rng.in_range(0, n - 1);
    for (std::size_t t = 0; t < k; ++t) plan.steps.push_back(rng.in_range(0, n - t - 2));
    const NumString merged = apply_merges(s, plan);
    const Partition p = merges_to_partition(s, plan);
    EXPECT_EQ(merged.size(), n - k);
    EXPECT_EQ(values_of(merged), piece_sums(s, p));
    EXPECT_EQ(apply_merges(s, partition_to_merges(s, p)), merged);
  }
}

// A partition's minimum piece sum equals the minimum gap of its cut points.
TEST(CoreProperties, PartitionMatchesPointGaps) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.in_range(0, 25);
    const NumString s = gen_instance(rng.next(), n, 100);
    const Partition p = random_partition(rng, n);
    const PointSet points = to_points(s);
    std::vector<std::size_t> selected{0};
    selected.insert(selected.end(), p.cuts.begin(), p.cuts.end());
    selected.push_back(n);
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t t = 1; t < selected.size(); ++t) {
      min_gap = std::min(min_gap, points[selected[t]] - points[selected[t - 1]]);
    }
    const std::vector<double> sums = piece_sums(s, p);
    EXPECT_EQ(*std::min_element(sums.begin(), sums.end()), min_gap);
    EXPECT_EQ(partition_from_points(s, selected), p);
    EXPECT_EQ(points[n], s.sum());
  }
}

// Sum conservation and merge monotonicity, one random merge at a time.
TEST(CoreProperties, SingleMergeInvariants) {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 20000; ++trial) {
    const std::size_t n = 2 + rng.in_range(0, 30);
    std::vector<double> values(n);
    for (double& v : values) v = static_cast<double>(rng.in_range(1, 1000000)) / 997.0;
    const NumString s = validate_string(values);
    const std::size_t step = rng.in_range(0, n - 2);
    const NumString merged = apply_merges(s, MergePlan{{step}});
    EXPECT_NEAR(merged.sum(), s.sum(), 1e-9 * s.sum());
    EXPECT_GE(merged.min(), s.min());
    EXPECT_GT(merged[step], std::max(s[step], s[step + 1]));
  }
}

}  // namespace
}  // namespace mergecut
