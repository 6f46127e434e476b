#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mergecut/core.hpp"

namespace mergecut {

enum class InnerSearch { binary, linear };
enum class Execution { serial, parallel };

// Dense tables of the max-min diversity recurrence. Points are numbered
// 1..m (point i is points[i-1]); subset sizes 1..max_size. Cell (i, j) is
// defined only for i >= j.
//
//   d(i, 1) = +inf
//   d(i, j) = max over i' in [j-1, i-1] of min(d(i', j-1), p_i - p_i')
//
// s(i, j) records the maximising i' (undefined for j == 1).
class DpTables {
 public:
  DpTables(std::size_t points, std::size_t max_size);

  std::size_t points() const noexcept { return points_; }
  std::size_t max_size() const noexcept { return max_size_; }

  bool defined(std::size_t i, std::size_t j) const noexcept {
    return j >= 1 && j <= max_size_ && i >= j && i <= points_;
  }
  double d(std::size_t i, std::size_t j) const noexcept { return d_[index(i, j)]; }
  std::size_t s(std::size_t i, std::size_t j) const noexcept { return s_[index(i, j)]; }

  void set(std::size_t i, std::size_t j, double value, std::size_t pred) noexcept {
    d_[index(i, j)] = value;
    s_[index(i, j)] = static_cast<std::uint32_t>(pred);
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const noexcept {
    return (j - 1) * points_ + (i - 1);
  }

  std::size_t points_;
  std::size_t max_size_;
  std::vector<double> d_;
  std::vector<std::uint32_t> s_;
};

struct InnerChoice {
  double value = 0;
  std::size_t predecessor = 0;

  friend bool operator==(const InnerChoice&, const InnerChoice&) = default;
};

// Both evaluate cell (i, j) from row j-1 of `tables` and return the same
// choice. Tie rule: if the optimum is attained where the gap p_i - p_i' is
// the binding term, that (unique) i' wins; otherwise the smallest i'.
//
// inner_max_binary locates the crossing of the nondecreasing d(., j-1) and
// the decreasing gap in O(log m), compares the two sandwiching candidates
// and, if the left one wins, walks to the left end of its plateau.
InnerChoice inner_max_binary(const DpTables& tables,
                             std::span<const double> points, std::size_t i,
                             std::size_t j);
InnerChoice inner_max_linear(const DpTables& tables,
                             std::span<const double> points, std::size_t i,
                             std::size_t j);

// Fills rows 1..max_size. Row j depends only on row j-1, so cells within a
// row are computed in parallel under Execution::parallel.
DpTables fill_dp_tables(const PointSet& points, std::size_t max_size,
                        InnerSearch search = InnerSearch::binary,
                        Execution exec = Execution::parallel);

// 1-based point indices of the optimal j-subset ending at point i, ascending.
std::vector<std::size_t> backtrack(const DpTables& tables, std::size_t i,
                                   std::size_t j);

struct DiversityResult {
  CutValue value;
  std::vector<std::size_t> selected;  // 0-based indices into the point set
};

// Max over j-subsets of the minimum pairwise distance. The witness always
// contains the first and the last point. Throws InvalidArgument (j < 2),
// TooFewPoints (size < j), TooLarge (table would not fit).
DiversityResult diversity_dp(const PointSet& points, std::size_t j,
                             Execution exec = Execution::parallel);

struct CutResult {
  CutValue value;
  Partition partition;
};

// Cut s into q pieces maximising the minimum piece sum. Throws QOutOfRange.
CutResult cut_string_dp(const NumString& s, std::size_t q,
                        Execution exec = Execution::parallel);

// Two pieces in O(n): the cut point nearest to the midpoint. Throws TooShort.
CutResult cut2_linear(const NumString& s);

// Three pieces in O(n): one cut sits at or next to a trisection point, the
// other is the best single cut of the rest. Throws TooShort.
CutResult cut3_linear(const NumString& s);

// Human-readable d and s tables (rows j = 2..max_size, columns i = 2..m,
// "/" for undefined cells) followed by the backtracking trace for the
// optimal max_size-subset ending at the last point.
std::string format_tables(const DpTables& tables, const PointSet& points);

}  // namespace mergecut
