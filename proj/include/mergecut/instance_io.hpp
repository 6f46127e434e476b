#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mergecut/core.hpp"

namespace mergecut {

// Instance text is either whitespace/comma separated decimal numbers or a
// JSON document {"values": [...]}; the first non-blank character decides.
// Failures throw ParseError with "line L, column C: ..." in the message.
NumString parse_instance(std::string_view text);

// "-" reads standard input.
NumString read_instance_file(const std::string& path);

enum class InstanceFormat { text, json };
std::string format_instance(const NumString& s, InstanceFormat format);

std::string join_numbers(const std::vector<double>& values);
std::string join_indices(const std::vector<std::size_t>& values);

// One solver run, printed as key=value lines in field order. Timing is the
// only nondeterministic field and can be left out.
struct ResultRecord {
  std::string algorithm;
  std::string instance;
  std::vector<std::pair<std::string, std::string>> fields;
  std::optional<std::int64_t> nanos;

  void add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
  void add(std::string key, double value) { add(std::move(key), format_number(value)); }
  const std::string* find(std::string_view key) const;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

std::string serialize(const ResultRecord& record, bool include_timing = true);
ResultRecord parse_record(std::string_view text);

}  // namespace mergecut
