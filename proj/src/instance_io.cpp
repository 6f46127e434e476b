#include "mergecut/instance_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace mergecut {
namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position pos;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

[[noreturn]] void parse_fail(std::string_view text, std::size_t offset, const std::string& what) {
  const Position pos = position_of(text, offset);
  throw Error(ErrorCode::ParseError, "line " + std::to_string(pos.line) + ", column " +
                                         std::to_string(pos.column) + ": " + what);
}

bool is_separator(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',';
}

NumString parse_text(std::string_view text) {
  std::vector<double> values;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && !is_separator(text[end])) ++end;
    const std::string_view token = text.substr(i, end - i);
    double v = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
      parse_fail(text, i, "not a number: '" + std::string(token) + "'");
    }
    if (!std::isfinite(v) || !(v > 0)) {
      parse_fail(text, i, "value " + std::string(token) + " is not a finite positive number");
    }
    values.push_back(v);
    i = end;
  }
  if (values.empty()) parse_fail(text, text.size(), "instance contains no values");
  return NumString(std::move(values));
}

NumString parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(text, e.byte == 0 ? 0 : e.byte - 1, e.what());
  }
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_array()) {
    parse_fail(text, 0, "expected an object with a \"values\" array");
  }
  const auto& arr = doc["values"];
  std::vector<double> values;
  values.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) {
      parse_fail(text, 0, "values[" + std::to_string(i) + "] is not a number");
    }
    const double v = arr[i].get<double>();
    if (!std::isfinite(v) || !(v > 0)) {
      parse_fail(text, 0, "values[" + std::to_string(i) + "] is not a finite positive number");
    }
    values.push_back(v);
  }
  if (values.empty()) parse_fail(text, 0, "instance contains no values");
  return NumString(std::move(values));
}

}  // namespace

NumString parse_instance(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

NumString read_instance_file(const std::string& path) {
  std::string content;
  if (path == "-") {
    content.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    content.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return parse_instance(content);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what(), e.index());
  }
}

std::string join_numbers(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_number(values[i]);
  }
  return out;
}

std::string join_indices(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string format_instance(const NumString& s, InstanceFormat format) {
  const std::vector<double> values(s.values().begin(), s.values().end());
  if (format == InstanceFormat::json) return "{\"values\": [" + join_numbers(values) + "]}\n";
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += format_number(values[i]);
  }
  return out + '\n';
}

const std::string* ResultRecord::find(std::string_view key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string serialize(const ResultRecord& record, bool include_timing) {
  std::ostringstream out;
  out << "algorithm=" << record.algorithm << '\n';
  out << "instance=" << record.instance << '\n';
  for (const auto& [k, v] : record.fields) out << k << '=' << v << '\n';
  if (include_timing && record.nanos) out << "nanos=" << *record.nanos << '\n';
  return out.str();
}

ResultRecord parse_record(std::string_view text) {
  ResultRecord record;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "record line without '=': " + std::string(line));
    }
    std::string key(line.substr(0, eq));
    std::string value(line.substr(eq + 1));
    if (key == "algorithm") {
      record.algorithm = std::move(value);
    } else if (key == "instance") {
      record.instance = std::move(value);
    } else if (key == "nanos") {
      record.nanos = std::stoll(value);
    } else {
      record.add(std::move(key), std::move(value));
    }
  }
  return record;
}

}  // namespace mergecut
