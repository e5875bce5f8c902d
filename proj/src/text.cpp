#include "corrtree/text.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace corrtree::text {

std::string shortest(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  std::string s(buf.data(), end);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string fixed(double v, int decimals) {
  std::array<char, 64> buf{};
  const int len = std::snprintf(buf.data(), buf.size(), "%.*f", decimals, v);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

std::string csv_field(std::string_view s, char delimiter) {
  if (s.find_first_of(std::string{delimiter, '"', '\n', '\r'}) == std::string_view::npos &&
      trim(s).size() == s.size())
    return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool split_record(std::string_view line, char delimiter, std::vector<std::string>& out) {
  out.clear();
  std::size_t pos = 0;
  while (true) {
    std::string field;
    // Skip leading blanks to detect a quoted field.
    std::size_t p = pos;
    while (p < line.size() && (line[p] == ' ' || line[p] == '\t') && line[p] != delimiter) ++p;
    if (p < line.size() && line[p] == '"') {
      ++p;
      bool closed = false;
      while (p < line.size()) {
        if (line[p] == '"') {
          if (p + 1 < line.size() && line[p + 1] == '"') {
            field += '"';
            p += 2;
            continue;
          }
          closed = true;
          ++p;
          break;
        }
        field += line[p++];
      }
      if (!closed) return false;
      while (p < line.size() && line[p] != delimiter) ++p;
      out.push_back(std::move(field));
      if (p >= line.size()) break;
      pos = p + 1;
      continue;
    }
    const auto next = line.find(delimiter, pos);
    const auto raw = line.substr(pos, next == std::string_view::npos ? std::string_view::npos
                                                                       : next - pos);
    out.emplace_back(trim(raw));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return true;
}

}  // namespace corrtree::text
