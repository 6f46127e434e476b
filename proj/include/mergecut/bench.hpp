#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mergecut {

// Cross-checking benchmark for MaxMin-Merge(k): every cell (n, k, seed)
// solves the same generated instance with each algorithm, times it, and
// insists that all values agree.
struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> ks;
  std::size_t seeds = 1;
  std::uint64_t value_max = 1000;
  bool include_oracle = false;
  int threads = 1;  // cells evaluated concurrently
};

struct BenchRow {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  double value = 0;
  std::int64_t nanos = 0;
};

class BenchMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rows sorted by (n, k, seed) then algorithm order dp, fpt, search, oracle.
// Throws InvalidArgument for empty lists or k >= n, BenchMismatch when
// algorithms disagree.
std::vector<BenchRow> run_bench(const BenchConfig& config);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace mergecut
