#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gfan {

/// One line of machine-readable output: `kind key=value key=value ...`.
/// Keys and values contain no whitespace and keys contain no '='.
struct Record {
  Record() = default;
  explicit Record(std::string k) : kind(std::move(k)) {}

  std::string kind;
  std::vector<std::pair<std::string, std::string>> fields;

  Record& add(std::string key, std::string value);
  const std::string* find(const std::string& key) const;
  bool operator==(const Record&) const = default;
};

/// Throws InvalidArgument on a record that could not be parsed back.
std::string format_records(const std::vector<Record>& records);
/// Throws ParseError.
std::vector<Record> parse_records(const std::string& text);

}  // namespace gfan
