#include "mergecut/fpt.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <utility>

namespace mergecut {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

// Binary min-heap over piece ids keyed by (value[id], id). Piece ids are the
// first kept slot of a piece, so id order is string order and ties go to
// the leftmost piece.
class PieceHeap {
 public:
  explicit PieceHeap(std::size_t capacity) : pos_(capacity, kAbsent) {
    heap_.reserve(capacity);
  }

  bool empty() const noexcept { return heap_.empty(); }
  std::uint32_t top() const noexcept { return heap_.front(); }
  std::size_t size() const noexcept { return heap_.size(); }
  std::uint32_t at(std::size_t i) const noexcept { return heap_[i]; }

  void build(const std::vector<double>& value) {
    heap_.clear();
    for (std::uint32_t id = 0; id < pos_.size(); ++id) {
      pos_[id] = static_cast<std::uint32_t>(heap_.size());
      heap_.push_back(id);
    }
    for (std::size_t i = heap_.size() / 2; i-- > 0;) sift_down(i, value);
  }

  void erase(std::uint32_t id, const std::vector<double>& value) {
    const std::size_t i = pos_[id];
    const std::uint32_t last = heap_.back();
    heap_.pop_back();
    pos_[id] = kAbsent;
    if (i == heap_.size()) return;
    place(i, last);
    sift_down(i, value);
    sift_up(pos_[last], value);
  }

  // The key of `id` grew.
  void increased(std::uint32_t id, const std::vector<double>& value) {
    sift_down(pos_[id], value);
  }

 private:
  static bool less(std::uint32_t a, std::uint32_t b, const std::vector<double>& value) {
    return value[a] < value[b] || (value[a] == value[b] && a < b);
  }

  void place(std::size_t i, std::uint32_t id) {
    heap_[i] = id;
    pos_[id] = static_cast<std::uint32_t>(i);
  }

  void sift_up(std::size_t i, const std::vector<double>& value) {
    const std::uint32_t id = heap_[i];
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!less(id, heap_[parent], value)) break;
      place(i, heap_[parent]);
      i = parent;
    }
    place(i, id);
  }

  void sift_down(std::size_t i, const std::vector<double>& value) {
    const std::uint32_t id = heap_[i];
    const std::size_t n = heap_.size();
    for (;;) {
      std::size_t child = 2 * i + 1;
      if (child >= n) break;
      if (child + 1 < n && less(heap_[child + 1], heap_[child], value)) ++child;
      if (!less(heap_[child], id, value)) break;
      place(i, heap_[child]);
      i = child;
    }
    place(i, id);
  }

  std::vector<std::uint32_t> heap_;
  std::vector<std::uint32_t> pos_;
};

// A piece covers a contiguous run of kept slots [first, last]. value is
// meaningful at `first`; other_end links first <-> last.
struct SearchState {
  std::vector<double> value;
  std::vector<std::uint32_t> other_end;
  PieceHeap heap;
};

struct Leaf {
  double value = -kInf;
  std::vector<std::size_t> boundaries;  // original cut index removed by each merge
  std::size_t nodes = 0;
};

class Search {
 public:
  Search(const ReducedInstance& reduced, const FptOptions& options)
      : kept_(reduced.kept), removed_min_(reduced.removed_min), options_(options) {}

  Leaf run(std::size_t k) {
    const std::size_t K = kept_.size();
    SearchState root{std::vector<double>(K), std::vector<std::uint32_t>(K), PieceHeap(K)};
    for (std::uint32_t t = 0; t < K; ++t) {
      root.value[t] = kept_[t].value;
      root.other_end[t] = t;
    }
    root.heap.build(root.value);
    std::vector<std::size_t> path;
    path.reserve(k);
    Leaf best;
    if (options_.parallel) {
#pragma omp parallel
#pragma omp single
      best = explore(std::move(root), k, path, 0);
    } else {
      best = explore(std::move(root), k, path, 0);
    }
    return best;
  }

 private:
  void merge(SearchState& st, std::uint32_t left, std::uint32_t right) const {
    const std::uint32_t right_last = st.other_end[right];
    st.value[left] += st.value[right];
    st.other_end[left] = right_last;
    st.other_end[right_last] = left;
    st.heap.increased(left, st.value);
    st.heap.erase(right, st.value);
  }

  void verify_heap(const SearchState& st) const {
    std::vector<std::uint32_t> pieces;
    for (std::uint32_t f = 0; f < kept_.size(); f = st.other_end[f] + 1) pieces.push_back(f);
    std::vector<std::uint32_t> in_heap;
    for (std::size_t i = 0; i < st.heap.size(); ++i) in_heap.push_back(st.heap.at(i));
    std::sort(in_heap.begin(), in_heap.end());
    if (pieces != in_heap) {
      throw Error(ErrorCode::InvalidArgument, "search heap does not mirror the string state");
    }
    const std::uint32_t top = st.heap.top();
    for (std::uint32_t f : pieces) {
      if (st.value[f] < st.value[top] || (st.value[f] == st.value[top] && f < top)) {
        throw Error(ErrorCode::InvalidArgument, "search heap top is not the leftmost minimum");
      }
    }
  }

  Leaf explore(SearchState st, std::size_t remaining, std::vector<std::size_t>& path,
               std::size_t depth) const {
    if (options_.check_heap) verify_heap(st);
    const std::uint32_t x = st.heap.top();
    const std::uint32_t x_last = st.other_end[x];
    const bool can_left = remaining > 0 && x > 0 && kept_[x].left_mergeable;
    const bool can_right =
        remaining > 0 && x_last + 1 < kept_.size() && kept_[x_last].right_mergeable;
    if (!can_left && !can_right) {
      return Leaf{std::min(st.value[x], removed_min_), path, 1};
    }

    Leaf left_leaf;
    Leaf right_leaf;
    if (can_left && can_right) {
      const std::uint32_t y = st.other_end[x - 1];
      const bool spawn = options_.parallel && depth < options_.task_depth;
      if (spawn) {
        SearchState child = st;
        merge(child, y, x);
        std::vector<std::size_t> left_path = path;
        left_path.push_back(kept_[x].index);
#pragma omp task shared(left_leaf) firstprivate(child, left_path)
        left_leaf = explore(std::move(child), remaining - 1, left_path, depth + 1);
        auto right_path = path;
        merge(st, x, x_last + 1);
        right_path.push_back(kept_[x_last + 1].index);
        right_leaf = explore(std::move(st), remaining - 1, right_path, depth + 1);
#pragma omp taskwait
      } else {
        SearchState child = st;
        merge(child, y, x);
        path.push_back(kept_[x].index);
        left_leaf = explore(std::move(child), remaining - 1, path, depth + 1);
        path.back() = kept_[x_last + 1].index;
        merge(st, x, x_last + 1);
        right_leaf = explore(std::move(st), remaining - 1, path, depth + 1);
        path.pop_back();
      }
    } else if (can_left) {
      const std::uint32_t y = st.other_end[x - 1];
      merge(st, y, x);
      path.push_back(kept_[x].index);
      left_leaf = explore(std::move(st), remaining - 1, path, depth + 1);
      path.pop_back();
    } else {
      path.push_back(kept_[x_last + 1].index);
      merge(st, x, x_last + 1);
      right_leaf = explore(std::move(st), remaining - 1, path, depth + 1);
      path.pop_back();
    }

    const std::size_t nodes = 1 + left_leaf.nodes + right_leaf.nodes;
    Leaf& winner = right_leaf.value > left_leaf.value ? right_leaf : left_leaf;
    winner.nodes = nodes;
    return std::move(winner);
  }

  const std::vector<KeptEntry>& kept_;
  double removed_min_;
  const FptOptions& options_;
};

ReducedInstance whole_string(const NumString& s) {
  ReducedInstance r;
  r.removed_min = kInf;
  r.kept.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    r.kept.push_back(KeptEntry{i, s[i], i > 0, i + 1 < s.size()});
  }
  return r;
}

void check_k(const NumString& s, std::size_t k, std::size_t min_k) {
  if (k < min_k || k > s.size() - 1) {
    throw Error(ErrorCode::KOutOfRange,
                "k must be in [" + std::to_string(min_k) + ", " +
                    std::to_string(s.size() - 1) + "]");
  }
}

}  // namespace

ReducedInstance reduce_instance(const NumString& s, std::size_t k) {
  check_k(s, k, 1);
  const std::size_t n = s.size();
  if (n <= 4 * k) return whole_string(s);

  // Min-heap over (value, index); popping 2k entries costs O(k log n).
  std::vector<std::pair<double, std::size_t>> heap;
  heap.reserve(n);
  for (std::size_t i = 0; i < n; ++i) heap.emplace_back(s[i], i);
  std::make_heap(heap.begin(), heap.end(), std::greater<>{});
  std::vector<bool> keep(n, false);
  for (std::size_t t = 0; t < 2 * k; ++t) {
    std::pop_heap(heap.begin(), heap.end(), std::greater<>{});
    const std::size_t i = heap.back().second;
    heap.pop_back();
    keep[i] = true;
    if (i > 0) keep[i - 1] = true;
    if (i + 1 < n) keep[i + 1] = true;
  }

  ReducedInstance r;
  r.removed_min = kInf;
  for (std::size_t i = 0; i < n; ++i) {
    if (!keep[i]) {
      r.removed_min = std::min(r.removed_min, s[i]);
      continue;
    }
    r.kept.push_back(KeptEntry{i, s[i], i > 0 && keep[i - 1], i + 1 < n && keep[i + 1]});
  }
  return r;
}

FptResult maxmin_merge_fpt(const NumString& s, std::size_t k, const FptOptions& options) {
  check_k(s, k, 0);
  FptResult result;
  if (k == 0) {
    result.value = CutValue{s.min()};
    result.nodes = 1;
    return result;
  }

  const ReducedInstance reduced = options.reduce ? reduce_instance(s, k) : whole_string(s);
  Leaf best = Search(reduced, options).run(k);
  result.nodes = best.nodes;
  result.value = CutValue{best.value};

  // A leaf reached with merges to spare (its minimum had no mergeable
  // neighbour) is completed with leftmost remaining merges; these can only
  // raise the minimum, so the value is recomputed.
  const bool padded = best.boundaries.size() < k;
  std::vector<bool> removed(s.size(), false);
  for (std::size_t c : best.boundaries) removed[c] = true;
  for (std::size_t c = 1; best.boundaries.size() < k && c < s.size(); ++c) {
    if (!removed[c]) {
      removed[c] = true;
      best.boundaries.push_back(c);
    }
  }

  // Boundary c joins the pieces holding originals c-1 and c; the left one
  // sits at c-1 minus the boundaries already removed to its left.
  for (std::size_t t = 0; t < best.boundaries.size(); ++t) {
    const std::size_t c = best.boundaries[t];
    std::size_t shift = 0;
    for (std::size_t u = 0; u < t; ++u) shift += best.boundaries[u] < c ? 1 : 0;
    result.plan.steps.push_back(c - 1 - shift);
  }
  if (padded) result.value = CutValue{apply_merges(s, result.plan).min()};
  return result;
}

}  // namespace mergecut
