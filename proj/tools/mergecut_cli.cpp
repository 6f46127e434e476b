// mergecut command-line front end.
//
// Exit codes: 0 ok, 1 bad arguments or unreadable input, 2 no solution,
// 3 --algo search on non-integer input, 4 bench mismatch.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mergecut/bench.hpp"
#include "mergecut/core.hpp"
#include "mergecut/fpt.hpp"
#include "mergecut/greedy.hpp"
#include "mergecut/instance_io.hpp"
#include "mergecut/kcut_dp.hpp"
#include "mergecut/oracle.hpp"

namespace {

using namespace mergecut;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitNonInteger = 3;
constexpr int kExitMismatch = 4;

template <typename F>
auto timed(std::int64_t& nanos, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(
              std::chrono::steady_clock::now() - start)
              .count();
  return result;
}

// "1,2,5..8" -> 1 2 5 6 7 8
std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    const std::size_t dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoul(item));
      } else {
        const std::size_t lo = std::stoul(item.substr(0, dots));
        const std::size_t hi = std::stoul(item.substr(dots + 2));
        for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad list item '" + item + "'");
    }
  }
  return out;
}

std::vector<double> as_vector(const NumString& s) {
  return {s.values().begin(), s.values().end()};
}

struct Common {
  std::string input;
  bool no_timing = false;
};

void print(const ResultRecord& record, const Common& common) {
  std::cout << serialize(record, !common.no_timing);
}

int cmd_fewest_merge(const Common& common, double b, const std::string& emit) {
  const NumString s = read_instance_file(common.input);
  ResultRecord record{"greedy", common.input, {}, std::nullopt};
  std::int64_t nanos = 0;
  const BPartitionResult res = timed(nanos, [&] { return optimal_b_partition(s, b); });
  const MergePlan plan = partition_to_merges(s, res.partition);
  const NumString merged = apply_merges(s, plan);
  record.add("n", std::to_string(s.size()));
  record.add("b", b);
  record.add("merges", std::to_string(res.merges));
  record.add("pieces", std::to_string(res.piece_count));
  record.add("value", merged.min());
  if (emit == "plan") {
    record.add("plan", join_indices(plan.steps));
  } else if (emit == "partition") {
    record.add("cuts", join_indices(res.partition.cuts));
  } else {
    record.add("merged", join_numbers(as_vector(merged)));
  }
  record.nanos = nanos;
  print(record, common);
  return kExitOk;
}

int cmd_maxmin_merge(const Common& common, std::size_t k, const std::string& algo) {
  const NumString s = read_instance_file(common.input);
  if (k > s.size() - 1) {
    throw Error(ErrorCode::KOutOfRange, "k must be in [0, " + std::to_string(s.size() - 1) + "]");
  }
  if (algo == "search" && !s.all_integral()) {
    std::cerr << "error: --algo search requires integer values\n";
    return kExitNonInteger;
  }
  std::int64_t nanos = 0;
  MergePlan plan;
  double value = 0;
  if (algo == "dp") {
    const CutResult r = timed(nanos, [&] { return cut_string_dp(s, s.size() - k); });
    value = r.value.value;
    plan = partition_to_merges(s, r.partition);
  } else if (algo == "fpt") {
    const FptResult r = timed(nanos, [&] { return maxmin_merge_fpt(s, k); });
    value = r.value.value;
    plan = r.plan;
  } else if (algo == "search") {
    const MaxMinResult r = timed(nanos, [&] { return maxmin_merge_by_search(s, k); });
    value = r.value.value;
    plan = r.plan;
  } else {
    const OracleBudget budget = OracleBudget::from_env();
    value = timed(nanos, [&] { return oracle_maxmin_cut(s, s.size() - k, budget); }).value;
    // The oracle only reports the value; the plan comes from the DP.
    plan = partition_to_merges(s, cut_string_dp(s, s.size() - k).partition);
  }
  ResultRecord record{algo, common.input, {}, nanos};
  record.add("n", std::to_string(s.size()));
  record.add("k", std::to_string(k));
  record.add("value", value);
  record.add("plan", join_indices(plan.steps));
  record.add("merged", join_numbers(as_vector(apply_merges(s, plan))));
  print(record, common);
  return kExitOk;
}

int cmd_cut(const Common& common, std::size_t pieces, bool dump_tables, const std::string& algo) {
  const NumString s = read_instance_file(common.input);
  if (pieces < 1 || pieces > s.size()) {
    throw Error(ErrorCode::QOutOfRange, "pieces must be in [1, " + std::to_string(s.size()) + "]");
  }
  const bool linear = algo == "linear" || (algo == "auto" && (pieces == 2 || pieces == 3));
  if (algo == "linear" && pieces != 2 && pieces != 3) {
    throw Error(ErrorCode::InvalidArgument, "--algo linear supports 2 or 3 pieces");
  }
  std::int64_t nanos = 0;
  std::string name;
  CutResult r;
  if (linear) {
    name = pieces == 2 ? "cut2_linear" : "cut3_linear";
    r = timed(nanos, [&] { return pieces == 2 ? cut2_linear(s) : cut3_linear(s); });
  } else {
    name = "dp";
    r = timed(nanos, [&] { return cut_string_dp(s, pieces); });
  }
  ResultRecord record{name, common.input, {}, nanos};
  record.add("n", std::to_string(s.size()));
  record.add("pieces", std::to_string(pieces));
  record.add("value", r.value.value);
  record.add("cuts", join_indices(r.partition.cuts));
  record.add("sums", join_numbers(piece_sums(s, r.partition)));
  print(record, common);
  if (dump_tables) {
    const PointSet points = to_points(s);
    std::cout << '\n' << format_tables(fill_dp_tables(points, pieces + 1), points);
  }
  return kExitOk;
}

int cmd_bench(const BenchConfig& config, const std::string& out_path) {
  const std::vector<BenchRow> rows = run_bench(config);
  if (out_path == "-") {
    write_bench_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + out_path);
    write_bench_csv(out, rows);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal merging and cutting of positive-number strings"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", common.input, "Instance file ('-' for stdin)")->required();
    sub->add_flag("--no-timing", common.no_timing, "Omit the nanos field");
  };

  double b = 0;
  std::string emit = "plan";
  auto* fewest = app.add_subcommand("fewest-merge", "Fewest merges making every value >= b");
  add_common(fewest);
  fewest->add_option("--b", b, "Threshold")->required();
  fewest->add_option("--emit", emit, "Artifact to print")
      ->check(CLI::IsMember({"plan", "partition", "merged"}));

  std::size_t k = 0;
  std::string algo = "dp";
  auto* maxmin = app.add_subcommand("maxmin-merge", "k merges maximising the minimum");
  add_common(maxmin);
  maxmin->add_option("--k", k, "Number of merges")->required();
  maxmin->add_option("--algo", algo, "Algorithm")
      ->check(CLI::IsMember({"dp", "fpt", "search", "oracle"}));

  std::size_t pieces = 0;
  bool dump_tables = false;
  std::string cut_algo = "auto";
  auto* cut = app.add_subcommand("cut", "Cut into pieces maximising the minimum piece sum");
  add_common(cut);
  cut->add_option("--pieces", pieces, "Number of pieces")->required();
  cut->add_flag("--dump-tables", dump_tables, "Print the d and s tables and the trace");
  cut->add_option("--algo", cut_algo, "auto routes 2 and 3 pieces to the linear algorithms")
      ->check(CLI::IsMember({"auto", "dp", "linear"}));

  std::string sizes;
  std::string ks;
  std::string out_path;
  BenchConfig bench_config;
  auto* bench = app.add_subcommand("bench", "Time dp, fpt and search and cross-check values");
  bench->add_option("--sizes", sizes, "Comma list of n (ranges a..b allowed)")->required();
  bench->add_option("--ks", ks, "Comma list of k (ranges a..b allowed)")->required();
  bench->add_option("--seeds", bench_config.seeds, "Seeds 0..seeds-1 per (n, k)")->required();
  bench->add_option("--out", out_path, "CSV path ('-' for stdout)")->required();
  bench->add_option("--value-max", bench_config.value_max, "Values drawn from [1, value-max]");
  bench->add_option("--threads", bench_config.threads, "Cells evaluated concurrently");
  bench->add_flag("--include-oracle", bench_config.include_oracle, "Also run the brute force");

  std::uint64_t seed = 0;
  std::size_t gen_n = 0;
  std::uint64_t gen_max = 0;
  std::string format = "text";
  auto* gen = app.add_subcommand("gen", "Generate a deterministic random integer instance");
  gen->add_option("--seed", seed, "Generator seed")->required();
  gen->add_option("--n", gen_n, "Length")->required();
  gen->add_option("--max", gen_max, "Largest value")->required();
  gen->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*fewest) return cmd_fewest_merge(common, b, emit);
    if (*maxmin) return cmd_maxmin_merge(common, k, algo);
    if (*cut) return cmd_cut(common, pieces, dump_tables, cut_algo);
    if (*bench) {
      bench_config.sizes = parse_list(sizes);
      bench_config.ks = parse_list(ks);
      return cmd_bench(bench_config, out_path);
    }
    if (*gen) {
      std::cout << format_instance(gen_instance(seed, gen_n, gen_max),
                                   format == "json" ? InstanceFormat::json : InstanceFormat::text);
      return kExitOk;
    }
  } catch (const BenchMismatch& e) {
    std::cerr << "mismatch: " << e.what();
    return kExitMismatch;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Infeasible) {
      std::cerr << "no solution\n";
      return kExitInfeasible;
    }
    if (e.code() == ErrorCode::NonIntegerInput) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitNonInteger;
    }
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
