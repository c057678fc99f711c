#include "outfk/records.hpp"

#include "outfk/error.hpp"

namespace outfk {

namespace {

bool needs_quotes(std::string_view value) {
  if (value.empty()) return true;
  for (char c : value) {
    if (c == ' ' || c == '"' || c == '=' || c == '\\' || static_cast<unsigned char>(c) < 0x20) return true;
  }
  return false;
}

bool valid_key(std::string_view key) {
  if (key.empty()) return false;
  for (char c : key) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::string render_record(const Record& record) {
  std::string out;
  for (const auto& [key, value] : record) {
    if (!valid_key(key)) throw Error(ErrorKind::InvalidArgument, "invalid record key '" + key + "'");
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    if (!needs_quotes(value)) {
      out += value;
      continue;
    }
    out += '"';
    for (char c : value) {
      if (c == '"' || c == '\\') out += '\\';
      if (c == '\n') {
        out += "\\n";
        continue;
      }
      out += c;
    }
    out += '"';
  }
  return out;
}

std::string render_records(const std::vector<Record>& records) {
  std::string out;
  for (const auto& r : records) out += render_record(r) + "\n";
  return out;
}

Record parse_record(std::string_view line) {
  Record record;
  std::size_t i = 0;
  auto fail = [&line](const std::string& why) -> Error {
    return Error(ErrorKind::ParseError, why + " in record '" + std::string(line) + "'");
  };
  while (i < line.size()) {
    const std::size_t eq = line.find('=', i);
    if (eq == std::string_view::npos) throw fail("missing '='");
    std::string key(line.substr(i, eq - i));
    if (!valid_key(key)) throw fail("invalid key '" + key + "'");
    i = eq + 1;
    std::string value;
    if (i < line.size() && line[i] == '"') {
      ++i;
      bool closed = false;
      while (i < line.size()) {
        const char c = line[i++];
        if (c == '"') {
          closed = true;
          break;
        }
        if (c == '\\') {
          if (i >= line.size()) throw fail("dangling escape");
          const char e = line[i++];
          if (e == 'n') {
            value += '\n';
          } else if (e == '"' || e == '\\') {
            value += e;
          } else {
            throw fail("unknown escape");
          }
        } else {
          value += c;
        }
      }
      if (!closed) throw fail("unterminated quote");
    } else {
      const std::size_t end = line.find(' ', i);
      value = std::string(line.substr(i, end == std::string_view::npos ? std::string_view::npos : end - i));
      i = end == std::string_view::npos ? line.size() : end;
    }
    record.emplace_back(std::move(key), std::move(value));
    if (i < line.size()) {
      if (line[i] != ' ') throw fail("expected a space");
      ++i;
      if (i == line.size()) throw fail("trailing space");
    }
  }
  return record;
}

std::vector<Record> parse_records(std::string_view text) {
  std::vector<Record> records;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(start, end - start);
    if (!line.empty()) records.push_back(parse_record(line));
    start = end + 1;
  }
  return records;
}

}  // namespace outfk
