#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mergecut {

enum class ErrorCode {
  EmptyString,
  NonPositiveValue,
  InvalidPartition,
  InvalidPlan,
  Infeasible,
  NonIntegerInput,
  KOutOfRange,
  QOutOfRange,
  TooShort,
  TooFewPoints,
  DuplicatePoints,
  TooLarge,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

// Every failure in the library is reported through this type. `index` is set
// when the failure points at a specific element (e.g. the offending value).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

// A non-empty sequence of finite, strictly positive numbers.
class NumString {
 public:
  // Throws EmptyString or NonPositiveValue (with the index of the first bad
  // value).
  explicit NumString(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  double min() const noexcept { return min_; }
  double sum() const noexcept { return sum_; }
  bool all_integral() const noexcept;

  NumString reversed() const;

  friend bool operator==(const NumString& a, const NumString& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<double> values_;
  double min_ = 0;
  double sum_ = 0;
};

NumString validate_string(std::vector<double> values);

// Interior cut indices: a cut at i separates values[0..i) from values[i..).
struct Partition {
  std::vector<std::size_t> cuts;

  std::size_t piece_count() const noexcept { return cuts.size() + 1; }
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Each step i merges the current element i with element i+1, evaluated
// against the string produced by all earlier steps.
struct MergePlan {
  std::vector<std::size_t> steps;

  std::size_t size() const noexcept { return steps.size(); }
  friend bool operator==(const MergePlan&, const MergePlan&) = default;
};

// Strictly increasing points on a line.
class PointSet {
 public:
  // Throws TooFewPoints when empty and DuplicatePoints when not strictly
  // increasing (index of the first offending point).
  explicit PointSet(std::vector<double> points);

  std::span<const double> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  double operator[](std::size_t i) const noexcept { return points_[i]; }

 private:
  std::vector<double> points_;
};

// Optimal minimum piece sum (equivalently minimum pairwise distance).
struct CutValue {
  double value = 0;

  auto operator<=>(const CutValue&) const = default;
};

// Prefix-sum embedding: points[0] = 0, points[i] = values[0] + ... + values[i-1].
PointSet to_points(const NumString& s);

void validate_partition(const NumString& s, const Partition& p);
void validate_plan(const NumString& s, const MergePlan& m);

// Canonical plan: pieces left to right, merges inside a piece left to right.
MergePlan partition_to_merges(const NumString& s, const Partition& p);
Partition merges_to_partition(const NumString& s, const MergePlan& m);
NumString apply_merges(const NumString& s, const MergePlan& m);
std::vector<double> piece_sums(const NumString& s, const Partition& p);

// Shortest decimal text that parses back to exactly `v`.
std::string format_number(double v);

// Partition whose cuts are exactly the selected interior points; `selected`
// are indices into to_points(s) and must include 0 and n.
Partition partition_from_points(const NumString& s,
                                std::span<const std::size_t> selected);

}  // namespace mergecut
