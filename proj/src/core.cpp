#include "mergecut/core.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <string>

namespace mergecut {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyString: return "EmptyString";
    case ErrorCode::NonPositiveValue: return "NonPositiveValue";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InvalidPlan: return "InvalidPlan";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::NonIntegerInput: return "NonIntegerInput";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::QOutOfRange: return "QOutOfRange";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

NumString::NumString(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorCode::EmptyString, "string must contain at least one value");
  }
  min_ = values_.front();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v) || !(v > 0)) {
      throw Error(ErrorCode::NonPositiveValue,
                  "value at index " + std::to_string(i) +
                      " is not a finite positive number",
                  i);
    }
    min_ = std::min(min_, v);
    sum_ += v;
  }
}

bool NumString::all_integral() const noexcept {
  // 2^53: beyond this doubles no longer represent every integer.
  constexpr double kExactLimit = 9007199254740992.0;
  return std::all_of(values_.begin(), values_.end(), [](double v) {
    return v == std::floor(v) && v <= kExactLimit;
  }) && sum_ <= kExactLimit;
}

NumString NumString::reversed() const {
  return NumString(std::vector<double>(values_.rbegin(), values_.rend()));
}

NumString validate_string(std::vector<double> values) {
  return NumString(std::move(values));
}

PointSet::PointSet(std::vector<double> points) : points_(std::move(points)) {
  if (points_.empty()) {
    throw Error(ErrorCode::TooFewPoints, "point set is empty");
  }
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1] < points_[i])) {
      throw Error(ErrorCode::DuplicatePoints,
                  "points must be strictly increasing (index " +
                      std::to_string(i) + ")",
                  i);
    }
  }
}

PointSet to_points(const NumString& s) {
  std::vector<double> points(s.size() + 1);
  points[0] = 0;
  for (std::size_t i = 0; i < s.size(); ++i) points[i + 1] = points[i] + s[i];
  return PointSet(std::move(points));
}

void validate_partition(const NumString& s, const Partition& p) {
  const std::size_t n = s.size();
  std::size_t prev = 0;
  for (std::size_t c : p.cuts) {
    if (c <= prev || c >= n) {
      throw Error(ErrorCode::InvalidPartition,
                  "cut " + std::to_string(c) +
                      " must be strictly increasing and within [1, n-1]");
    }
    prev = c;
  }
}

void validate_plan(const NumString& s, const MergePlan& m) {
  std::size_t len = s.size();
  for (std::size_t t = 0; t < m.steps.size(); ++t) {
    if (len < 2 || m.steps[t] + 1 >= len) {
      throw Error(ErrorCode::InvalidPlan,
                  "merge step " + std::to_string(t) + " (position " +
                      std::to_string(m.steps[t]) +
                      ") is out of range for length " + std::to_string(len),
                  t);
    }
    --len;
  }
}

MergePlan partition_to_merges(const NumString& s, const Partition& p) {
  validate_partition(s, p);
  MergePlan plan;
  plan.steps.reserve(s.size() - p.piece_count());
  std::size_t start = 0;
  for (std::size_t piece = 0; piece < p.piece_count(); ++piece) {
    const std::size_t end = piece < p.cuts.size() ? p.cuts[piece] : s.size();
    // Earlier pieces have collapsed to one element each, so this piece now
    // starts at position `piece`.
    for (std::size_t i = start + 1; i < end; ++i) plan.steps.push_back(piece);
    start = end;
  }
  return plan;
}

Partition merges_to_partition(const NumString& s, const MergePlan& m) {
  validate_plan(s, m);
  // starts[i] = original index where current element i begins.
  std::vector<std::size_t> starts(s.size());
  for (std::size_t i = 0; i < starts.size(); ++i) starts[i] = i;
  for (std::size_t step : m.steps) {
    starts.erase(starts.begin() + static_cast<std::ptrdiff_t>(step) + 1);
  }
  return Partition{std::vector<std::size_t>(starts.begin() + 1, starts.end())};
}

NumString apply_merges(const NumString& s, const MergePlan& m) {
  validate_plan(s, m);
  std::vector<double> cur(s.values().begin(), s.values().end());
  for (std::size_t step : m.steps) {
    cur[step] += cur[step + 1];
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(step) + 1);
  }
  return NumString(std::move(cur));
}

std::vector<double> piece_sums(const NumString& s, const Partition& p) {
  validate_partition(s, p);
  std::vector<double> sums;
  sums.reserve(p.piece_count());
  std::size_t start = 0;
  for (std::size_t piece = 0; piece < p.piece_count(); ++piece) {
    const std::size_t end = piece < p.cuts.size() ? p.cuts[piece] : s.size();
    double acc = 0;
    for (std::size_t i = start; i < end; ++i) acc += s[i];
    sums.push_back(acc);
    start = end;
  }
  return sums;
}

std::string format_number(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

Partition partition_from_points(const NumString& s,
                                std::span<const std::size_t> selected) {
  if (selected.size() < 2 || selected.front() != 0 ||
      selected.back() != s.size()) {
    throw Error(ErrorCode::InvalidPartition,
                "selected points must start at 0 and end at n");
  }
  Partition p{std::vector<std::size_t>(selected.begin() + 1, selected.end() - 1)};
  validate_partition(s, p);
  return p;
}

}  // namespace mergecut
