#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace corrtree::text {

// Shortest decimal string that parses back to exactly `v`. Always contains a
// '.' or exponent so the value reads as floating point ("1.0", not "1").
std::string shortest(double v);

// Fixed-point with `decimals` digits after the point.
std::string fixed(double v, int decimals);

// Quotes a delimited-text field when it contains the delimiter, a quote, or
// a line break.
std::string csv_field(std::string_view s, char delimiter = ',');

// Splits one record, honoring double-quoted fields ("" escapes a quote).
// Surrounding whitespace of unquoted fields is trimmed. Returns false on an
// unterminated quote.
bool split_record(std::string_view line, char delimiter, std::vector<std::string>& out);

std::string_view trim(std::string_view s);

}  // namespace corrtree::text
