#include "langdist/csv.hpp"

#include <fstream>
#include <sstream>

#include "langdist/errors.hpp"
#include "langdist/unicode.hpp"

namespace langdist::csv {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (!uni::is_valid_utf8(text))
    throw ParseError(path, 0, "file is not valid UTF-8");
  return text;
}

std::vector<Row> parse_string(std::string_view text, const std::string& origin) {
  if (!uni::is_valid_utf8(text))
    throw ParseError(origin, 0, "input is not valid UTF-8");
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<Row> rows;
  std::size_t i = 0;
  int line = 1;
  const std::size_t n = text.size();

  while (i < n) {
    // Start of a record.
    if (text[i] == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (text[i] == '\r' && i + 1 < n && text[i + 1] == '\n') {
      ++line;
      i += 2;
      continue;
    }
    if (text[i] == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }

    Row row;
    row.line = line;
    std::string field;
    bool quoted = false;
    bool done = false;
    while (!done) {
      if (quoted) {
        if (i >= n)
          throw ParseError(origin, row.line, "unterminated quoted field");
        char c = text[i];
        if (c == '"') {
          if (i + 1 < n && text[i + 1] == '"') {
            field += '"';
            i += 2;
          } else {
            quoted = false;
            ++i;
          }
        } else {
          if (c == '\n') ++line;
          field += c;
          ++i;
        }
      } else {
        if (i >= n) {
          row.fields.push_back(std::move(field));
          done = true;
        } else {
          char c = text[i];
          if (c == '"' && field.empty()) {
            quoted = true;
            ++i;
          } else if (c == ',') {
            row.fields.push_back(std::move(field));
            field.clear();
            ++i;
          } else if (c == '\n' || (c == '\r' && i + 1 < n && text[i + 1] == '\n')) {
            row.fields.push_back(std::move(field));
            i += (c == '\r') ? 2 : 1;
            ++line;
            done = true;
          } else if (c == '\r') {
            // solitary CR: treat as line end too
            row.fields.push_back(std::move(field));
            ++i;
            ++line;
            done = true;
          } else {
            field += c;
            ++i;
          }
        }
      }
    }
    // Skip records that are entirely empty (blank line between records).
    if (!(row.fields.size() == 1 && row.fields[0].empty()))
      rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Row> parse_file(const std::string& path) {
  return parse_string(read_file(path), path);
}

std::string escape_field(std::string_view field) {
  bool needs_quote =
      field.find_first_of(",\"\r\n") != std::string_view::npos ||
      (!field.empty() && field.front() == '#');
  if (!needs_quote) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

void append_row(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += escape_field(fields[i]);
  }
  out += '\n';
}

}  // namespace langdist::csv
