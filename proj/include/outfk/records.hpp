#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace outfk {

/// One line of `key=value` pairs in a fixed key order. Values that are empty
/// or contain spaces, quotes, '=' or backslashes are written in double
/// quotes with \" and \\ escapes.
using Record = std::vector<std::pair<std::string, std::string>>;

std::string render_record(const Record& record);
std::string render_records(const std::vector<Record>& records);

/// Throws Error(ParseError) on malformed input.
Record parse_record(std::string_view line);
std::vector<Record> parse_records(std::string_view text);

}  // namespace outfk
