#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace langdist::csv {

// One CSV dialect everywhere: comma separator, double-quote escaping with
// "" for a literal quote, UTF-8, '#' starts a comment line, header row
// required by every caller. Quoted fields may span lines.
struct Row {
  std::vector<std::string> fields;
  int line = 0;  // 1-based line where the record starts
};

// Parses complete CSV text. `origin` names the source in errors. A UTF-8
// BOM is skipped; comment and blank lines are dropped.
std::vector<Row> parse_string(std::string_view text, const std::string& origin);

std::vector<Row> parse_file(const std::string& path);

// Serialization: fields are quoted only when they contain a separator,
// quote, newline, or leading '#'.
std::string escape_field(std::string_view field);
void append_row(std::string& out, const std::vector<std::string>& fields);

// Whole-file read with a UTF-8 check; shared by the non-CSV parsers too.
std::string read_file(const std::string& path);

}  // namespace langdist::csv
