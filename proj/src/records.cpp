#include "gfan/records.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gfan/error.hpp"

namespace gfan {

Record& Record::add(std::string key, std::string value) {
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

const std::string* Record::find(const std::string& key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return &v;
  return nullptr;
}

namespace {

bool clean(const std::string& s, bool allow_equals) {
  return !s.empty() && std::none_of(s.begin(), s.end(), [&](unsigned char c) {
    return std::isspace(c) || (!allow_equals && c == '=');
  });
}

}  // namespace

std::string format_records(const std::vector<Record>& records) {
  std::string out;
  for (const auto& r : records) {
    if (!clean(r.kind, false)) throw Error(ErrorCode::InvalidArgument, "bad record kind '" + r.kind + "'");
    out += r.kind;
    for (const auto& [k, v] : r.fields) {
      if (!clean(k, false) || !clean(v, true))
        throw Error(ErrorCode::InvalidArgument, "bad record field '" + k + "=" + v + "'");
      out += ' ' + k + '=' + v;
    }
    out += '\n';
  }
  return out;
}

std::vector<Record> parse_records(const std::string& text) {
  std::vector<Record> out;
  std::istringstream lines(text);
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.empty()) continue;
    std::istringstream words(line);
    Record r;
    words >> r.kind;
    if (r.kind.find('=') != std::string::npos)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(number) + ": missing record kind");
    std::string w;
    while (words >> w) {
      auto eq = w.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == w.size())
        throw Error(ErrorCode::ParseError, "line " + std::to_string(number) + ": bad field '" + w + "'");
      r.add(w.substr(0, eq), w.substr(eq + 1));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gfan
