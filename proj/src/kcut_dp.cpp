#include "mergecut/kcut_dp.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace mergecut {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Keeps dense tables below ~3 GiB.
constexpr std::size_t kMaxCells = std::size_t{1} << 28;

// Point i (1-based) of the set.
inline double pt(std::span<const double> points, std::size_t i) {
  return points[i - 1];
}

// Best single interior cut of the segment between points a and b (0-based,
// b - a >= 2): value min(p_c - p_a, p_b - p_c), ties to the smaller c.
std::pair<double, std::size_t> best_single_cut(std::span<const double> p,
                                               std::size_t a, std::size_t b) {
  const double mid = p[a] + (p[b] - p[a]) / 2;
  auto first = p.begin() + static_cast<std::ptrdiff_t>(a + 1);
  auto last = p.begin() + static_cast<std::ptrdiff_t>(b);
  const std::size_t r = static_cast<std::size_t>(std::lower_bound(first, last, mid) - p.begin());
  double best_value = -1;
  std::size_t best_cut = a + 1;
  for (std::size_t c : {r - 1, r}) {
    if (c <= a || c >= b) continue;
    const double v = std::min(p[c] - p[a], p[b] - p[c]);
    if (v > best_value) {
      best_value = v;
      best_cut = c;
    }
  }
  return {best_value, best_cut};
}

}  // namespace

DpTables::DpTables(std::size_t points, std::size_t max_size)
    : points_(points), max_size_(max_size) {
  if (points != 0 && max_size > kMaxCells / points) {
    throw Error(ErrorCode::TooLarge, "dynamic-programming table too large");
  }
  d_.assign(points * max_size, kInf);
  s_.assign(points * max_size, 0);
}

InnerChoice inner_max_binary(const DpTables& tables,
                             std::span<const double> points, std::size_t i,
                             std::size_t j) {
  const std::size_t lo = j - 1;
  const std::size_t hi = i - 1;
  const double pi = pt(points, i);
  auto gap = [&](std::size_t t) { return pi - pt(points, t); };
  auto prev = [&](std::size_t t) { return tables.d(t, j - 1); };

  // First t in [lo, hi] where the gap no longer exceeds d(t, j-1).
  std::size_t a = lo;
  std::size_t b = hi + 1;
  while (a < b) {
    const std::size_t mid = a + (b - a) / 2;
    if (gap(mid) <= prev(mid)) {
      b = mid;
    } else {
      a = mid + 1;
    }
  }
  const std::size_t crossing = a;
  if (crossing <= hi && (crossing == lo || gap(crossing) >= prev(crossing - 1))) {
    return {gap(crossing), crossing};
  }

  // Left of the crossing the value is d(t, j-1); take the left end of the
  // plateau holding d(crossing-1, j-1).
  const double target = prev(crossing - 1);
  a = lo;
  b = crossing - 1;
  while (a < b) {
    const std::size_t mid = a + (b - a) / 2;
    if (prev(mid) >= target) {
      b = mid;
    } else {
      a = mid + 1;
    }
  }
  return {target, a};
}

InnerChoice inner_max_linear(const DpTables& tables,
                             std::span<const double> points, std::size_t i,
                             std::size_t j) {
  const double pi = pt(points, i);
  double best = -kInf;
  for (std::size_t t = j - 1; t <= i - 1; ++t) {
    best = std::max(best, std::min(tables.d(t, j - 1), pi - pt(points, t)));
  }
  std::size_t first_max = 0;
  for (std::size_t t = j - 1; t <= i - 1; ++t) {
    const double gap = pi - pt(points, t);
    const double prev = tables.d(t, j - 1);
    if (std::min(prev, gap) != best) continue;
    if (gap <= prev) return {best, t};
    if (first_max == 0) first_max = t;
  }
  return {best, first_max};
}

DpTables fill_dp_tables(const PointSet& points, std::size_t max_size,
                        InnerSearch search, Execution exec) {
  const std::size_t m = points.size();
  DpTables tables(m, max_size);
  const std::span<const double> p = points.points();
  if (max_size == 0) return tables;
  for (std::size_t i = 1; i <= m; ++i) tables.set(i, 1, kInf, 0);

  auto inner = search == InnerSearch::binary ? inner_max_binary : inner_max_linear;
  const bool parallel = exec == Execution::parallel;
  for (std::size_t j = 2; j <= max_size && j <= m; ++j) {
    const auto first = static_cast<std::ptrdiff_t>(j);
    const auto last = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t ii = first; ii <= last; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      const InnerChoice c = inner(tables, p, i, j);
      tables.set(i, j, c.value, c.predecessor);
    }
  }
  return tables;
}

std::vector<std::size_t> backtrack(const DpTables& tables, std::size_t i,
                                   std::size_t j) {
  std::vector<std::size_t> selected{i};
  for (; j >= 2; --j) {
    i = tables.s(i, j);
    selected.push_back(i);
  }
  std::reverse(selected.begin(), selected.end());
  return selected;
}

DiversityResult diversity_dp(const PointSet& points, std::size_t j,
                             Execution exec) {
  if (j < 2) {
    throw Error(ErrorCode::InvalidArgument, "subset size must be at least 2");
  }
  if (points.size() < j) {
    throw Error(ErrorCode::TooFewPoints, "fewer points than the subset size");
  }
  const DpTables tables = fill_dp_tables(points, j, InnerSearch::binary, exec);
  const std::size_t m = points.size();
  DiversityResult result;
  result.value = CutValue{tables.d(m, j)};
  for (std::size_t idx : backtrack(tables, m, j)) result.selected.push_back(idx - 1);
  return result;
}

CutResult cut_string_dp(const NumString& s, std::size_t q, Execution exec) {
  if (q < 1 || q > s.size()) {
    throw Error(ErrorCode::QOutOfRange,
                "piece count must be in [1, " + std::to_string(s.size()) + "]");
  }
  const DiversityResult div = diversity_dp(to_points(s), q + 1, exec);
  return CutResult{div.value, partition_from_points(s, div.selected)};
}

CutResult cut2_linear(const NumString& s) {
  if (s.size() < 2) throw Error(ErrorCode::TooShort, "two pieces need n >= 2");
  const PointSet points = to_points(s);
  const auto [value, cut] = best_single_cut(points.points(), 0, s.size());
  return CutResult{CutValue{value}, Partition{{cut}}};
}

CutResult cut3_linear(const NumString& s) {
  const std::size_t n = s.size();
  if (n < 3) throw Error(ErrorCode::TooShort, "three pieces need n >= 3");
  const PointSet points = to_points(s);
  const std::span<const double> p = points.points();
  const double total = p[n];

  std::vector<std::size_t> candidates;
  for (double t : {total / 3, 2 * total / 3}) {
    const std::size_t r = static_cast<std::size_t>(std::lower_bound(p.begin(), p.end(), t) - p.begin());
    if (r <= n && p[r] == t) {
      candidates.push_back(r);
    } else {
      candidates.push_back(r - 1);
      candidates.push_back(r);
    }
  }

  double best_value = -1;
  Partition best;
  for (std::size_t c : candidates) {
    if (c < 1 || c > n - 1) continue;
    if (c <= n - 2) {  // c as the first cut
      const auto [rest, other] = best_single_cut(p, c, n);
      const double v = std::min(p[c], rest);
      if (v > best_value) {
        best_value = v;
        best = Partition{{c, other}};
      }
    }
    if (c >= 2) {  // c as the second cut
      const auto [rest, other] = best_single_cut(p, 0, c);
      const double v = std::min(total - p[c], rest);
      if (v > best_value) {
        best_value = v;
        best = Partition{{other, c}};
      }
    }
  }
  return CutResult{CutValue{best_value}, best};
}

std::string format_tables(const DpTables& tables, const PointSet& points) {
  const std::size_t m = tables.points();
  const std::size_t J = std::min(tables.max_size(), m);
  std::ostringstream out;
  auto header = [&](const char* name) {
    out << name << "\nj\\i";
    for (std::size_t i = 2; i <= m; ++i) out << '\t' << i;
    out << '\n';
  };
  header("d(i,j)");
  for (std::size_t j = 2; j <= J; ++j) {
    out << j;
    for (std::size_t i = 2; i <= m; ++i) {
      out << '\t' << (tables.defined(i, j) ? format_number(tables.d(i, j)) : "/");
    }
    out << '\n';
  }
  header("s(i,j)");
  for (std::size_t j = 2; j <= J; ++j) {
    out << j;
    for (std::size_t i = 2; i <= m; ++i) {
      out << '\t' << (tables.defined(i, j) ? std::to_string(tables.s(i, j)) : "/");
    }
    out << '\n';
  }

  // Trace in the order predecessors are discovered; the last point joins at
  // the end.
  if (J >= 2) {
    out << "trace\n";
    std::vector<double> chosen;
    std::size_t i = m;
    for (std::size_t j = J; j >= 2; --j) {
      const std::size_t pred = tables.s(i, j);
      chosen.push_back(points[pred - 1]);
      std::sort(chosen.begin(), chosen.end());
      out << "s(" << i << ',' << j << ")=" << pred << "\t{";
      for (std::size_t t = 0; t < chosen.size(); ++t) {
        out << (t ? "," : "") << format_number(chosen[t]);
      }
      out << "}\n";
      i = pred;
    }
    chosen.push_back(points[m - 1]);
    std::sort(chosen.begin(), chosen.end());
    out << "/\t{";
    for (std::size_t t = 0; t < chosen.size(); ++t) {
      out << (t ? "," : "") << format_number(chosen[t]);
    }
    out << "}\n";
    out << "value=" << format_number(tables.d(m, J)) << '\n';
  }
  return out.str();
}

}  // namespace mergecut
