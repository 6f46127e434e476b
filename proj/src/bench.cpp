#include "mergecut/bench.hpp"

#include <chrono>
#include <optional>
#include <sstream>

#include "mergecut/core.hpp"
#include "mergecut/fpt.hpp"
#include "mergecut/greedy.hpp"
#include "mergecut/kcut_dp.hpp"
#include "mergecut/oracle.hpp"

namespace mergecut {
namespace {

struct Cell {
  std::size_t n;
  std::size_t k;
  std::uint64_t seed;
};

template <typename F>
BenchRow timed(const char* name, const Cell& cell, F&& solve) {
  const auto start = std::chrono::steady_clock::now();
  const double value = solve();
  const auto stop = std::chrono::steady_clock::now();
  return BenchRow{name, cell.n, cell.k, cell.seed, value,
                  std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()};
}

std::vector<BenchRow> run_cell(const Cell& cell, const BenchConfig& config,
                               const OracleBudget& budget) {
  const NumString s = gen_instance(cell.seed, cell.n, config.value_max);
  std::vector<BenchRow> rows;
  rows.push_back(timed("dp", cell, [&] {
    return cut_string_dp(s, cell.n - cell.k, Execution::serial).value.value;
  }));
  rows.push_back(timed("fpt", cell, [&] { return maxmin_merge_fpt(s, cell.k).value.value; }));
  rows.push_back(timed("search", cell, [&] {
    return maxmin_merge_by_search(s, cell.k).value.value;
  }));
  if (config.include_oracle) {
    rows.push_back(timed("oracle", cell, [&] {
      return oracle_maxmin_cut(s, cell.n - cell.k, budget).value;
    }));
  }
  return rows;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.sizes.empty() || config.ks.empty() || config.seeds == 0) {
    throw Error(ErrorCode::InvalidArgument, "bench needs non-empty sizes, ks and seeds >= 1");
  }
  const OracleBudget budget = OracleBudget::from_env();
  std::vector<Cell> cells;
  for (std::size_t n : config.sizes) {
    for (std::size_t k : config.ks) {
      if (n == 0 || k >= n) {
        throw Error(ErrorCode::InvalidArgument, "bench requires 0 <= k < n (n=" +
                                                    std::to_string(n) + ", k=" +
                                                    std::to_string(k) + ")");
      }
      if (config.include_oracle && n > budget.max_n) {
        throw Error(ErrorCode::InvalidArgument,
                    "oracle cap " + std::to_string(budget.max_n) + " is below n=" +
                        std::to_string(n));
      }
      for (std::uint64_t seed = 0; seed < config.seeds; ++seed) cells.push_back({n, k, seed});
    }
  }

  std::vector<std::vector<BenchRow>> results(cells.size());
  std::vector<std::optional<std::string>> failures(cells.size());
  const auto count = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(dynamic) num_threads(config.threads) if (config.threads > 1)
  for (std::ptrdiff_t c = 0; c < count; ++c) {
    try {
      results[c] = run_cell(cells[c], config, budget);
    } catch (const std::exception& e) {
      failures[c] = e.what();
    }
  }

  std::ostringstream report;
  std::vector<BenchRow> rows;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const Cell& cell = cells[c];
    if (failures[c]) {
      throw Error(ErrorCode::InvalidArgument, "bench cell failed: " + *failures[c]);
    }
    bool agree = true;
    for (const BenchRow& row : results[c]) agree = agree && row.value == results[c].front().value;
    if (!agree) {
      report << "n=" << cell.n << " k=" << cell.k << " seed=" << cell.seed << ':';
      for (const BenchRow& row : results[c]) {
        report << ' ' << row.algorithm << '=' << format_number(row.value);
      }
      report << '\n';
    }
    rows.insert(rows.end(), results[c].begin(), results[c].end());
  }
  if (!report.str().empty()) throw BenchMismatch("algorithms disagree:\n" + report.str());
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "algorithm,n,k,seed,value,nanos\n";
  for (const BenchRow& r : rows) {
    out << r.algorithm << ',' << r.n << ',' << r.k << ',' << r.seed << ','
        << format_number(r.value) << ',' << r.nanos << '\n';
  }
}

}  // namespace mergecut
