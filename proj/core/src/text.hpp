#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kroots::detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline int parse_int(std::string_view token, std::string_view what) {
  token = trim(token);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("malformed " + std::string(what) + ": '" +
                                std::string(token) + "'");
  }
  return value;
}

/// Splits "a,b,c" into integers; an empty string yields an empty list.
inline std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename Range>
std::string join(const Range& values) {
  std::string out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace kroots::detail
