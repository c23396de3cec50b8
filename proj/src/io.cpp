#include "langdist/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>

#include "langdist/csv.hpp"
#include "langdist/errors.hpp"
#include "langdist/unicode.hpp"

namespace langdist::io {

namespace {

namespace fs = std::filesystem;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

double parse_double(std::string_view token, const std::string& origin, int line) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(origin, line, "not a number: '" + std::string(token) + "'");
  if (!std::isfinite(value))
    throw ParseError(origin, line, "non-finite number: '" + std::string(token) + "'");
  return value;
}

long parse_int(std::string_view token, const std::string& origin, int line) {
  long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(origin, line, "not an integer: '" + std::string(token) + "'");
  return value;
}

// Shortest representation that parses back to the same double.
std::string format_full(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string format_fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void expect_header(const csv::Row& header, const std::vector<std::string>& expected,
                   const std::string& origin) {
  std::vector<std::string> got;
  for (const std::string& f : header.fields) {
    std::string low;
    for (char c : trim(f)) low += static_cast<char>(std::tolower((unsigned char)c));
    got.push_back(low);
  }
  if (got != expected) {
    std::string want;
    for (std::size_t i = 0; i < expected.size(); ++i)
      want += (i ? "," : "") + expected[i];
    throw ParseError(origin, header.line, "expected header '" + want + "'");
  }
}

LanguageId language_from_stem(const std::string& path) {
  const std::string stem = fs::path(path).stem().string();
  return LanguageId::make(stem, stem);
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

std::vector<std::pair<std::string, int>> split_lines(const std::string& text) {
  std::vector<std::pair<std::string, int>> lines;
  std::string cur;
  int line_no = 1;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.emplace_back(cur, line_no);
      cur.clear();
      ++line_no;
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.emplace_back(cur, line_no);
  return lines;
}

}  // namespace

// ---- Embedding tables -------------------------------------------------

embed::Table parse_embedding_string(const std::string& text, const std::string& origin,
                                    LanguageId language) {
  if (!uni::is_valid_utf8(text)) throw ParseError(origin, 0, "file is not valid UTF-8");
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(origin, 0, "empty embedding file");

  const auto header = split_ws(lines[0].first);
  if (header.size() != 2)
    throw ParseError(origin, lines[0].second,
                     "malformed header: expected 'n d' with two integers");
  const long n = parse_int(header[0], origin, lines[0].second);
  const long d = parse_int(header[1], origin, lines[0].second);
  if (n < 1 || d < 1)
    throw ParseError(origin, lines[0].second, "header requires n >= 1 and d >= 1");

  embed::Table table(std::move(language), static_cast<int>(d));
  long rows = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line, line_no] = lines[i];
    if (trim(line).empty()) {
      if (i + 1 != lines.size())
        throw ParseError(origin, line_no, "blank line inside embedding data");
      continue;
    }
    const auto tokens = split_ws(line);
    if (static_cast<long>(tokens.size()) != d + 1)
      throw ParseError(origin, line_no,
                       "expected a word and " + std::to_string(d) + " values, got " +
                           std::to_string(tokens.size()) + " tokens");
    std::vector<double> vec;
    vec.reserve(d);
    for (long k = 1; k <= d; ++k)
      vec.push_back(parse_double(tokens[static_cast<std::size_t>(k)], origin, line_no));
    try {
      table.add(tokens[0], std::move(vec));
    } catch (const DomainError& e) {
      throw ParseError(origin, line_no, e.what());
    }
    ++rows;
  }
  if (rows != n)
    throw ParseError(origin, 0, "header claims " + std::to_string(n) + " words but " +
                                    std::to_string(rows) + " rows follow");
  return table;
}

embed::Table parse_embedding_file(const std::string& path,
                                  std::optional<LanguageId> language) {
  return parse_embedding_string(csv::read_file(path), path,
                                language ? *language : language_from_stem(path));
}

std::string serialize_embedding(const embed::Table& table) {
  std::string out = std::to_string(table.size()) + " " + std::to_string(table.dim()) + "\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    out += table.words()[i];
    for (double v : table.vector_at(i)) {
      out += ' ';
      out += format_full(v);
    }
    out += '\n';
  }
  return out;
}

// ---- Bilingual lexicons ------------------------------------------------

embed::Lexicon parse_lexicon_string(const std::string& text, const std::string& origin,
                                    LanguageId source_language,
                                    LanguageId target_language) {
  if (!uni::is_valid_utf8(text)) throw ParseError(origin, 0, "file is not valid UTF-8");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [line, line_no] : split_lines(text)) {
    if (line.empty() || line[0] == '#') continue;
    if (trim(line).empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(origin, line_no, "expected two tab-separated columns");
    const std::string src = trim(line.substr(0, tab));
    const std::string tgt = trim(line.substr(tab + 1));
    if (src.empty() || tgt.empty() || tgt.find('\t') != std::string::npos)
      throw ParseError(origin, line_no, "expected exactly two non-empty columns");
    pairs.emplace_back(src, tgt);
  }
  if (pairs.empty()) throw ParseError(origin, 0, "lexicon has no pairs");
  try {
    return embed::Lexicon::make(std::move(source_language), std::move(target_language),
                                std::move(pairs));
  } catch (const DomainError& e) {
    throw ParseError(origin, 0, e.what());
  }
}

embed::Lexicon parse_lexicon_tsv(const std::string& path, LanguageId source_language,
                                 LanguageId target_language) {
  return parse_lexicon_string(csv::read_file(path), path, std::move(source_language),
                              std::move(target_language));
}

// ---- Score tables ------------------------------------------------------

std::vector<ScoreTable> parse_scores_string(const std::string& text,
                                            const std::string& origin) {
  const auto rows = csv::parse_string(text, origin);
  if (rows.empty()) throw ParseError(origin, 0, "missing header row");
  expect_header(rows[0], {"country", "year", "reading", "listening", "speaking",
                          "writing", "total"},
                origin);

  std::map<int, std::vector<ScoreRow>> by_year;
  std::set<std::pair<int, std::string>> seen;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const csv::Row& row = rows[i];
    if (row.fields.size() != 7)
      throw ParseError(origin, row.line, "expected 7 columns, got " +
                                             std::to_string(row.fields.size()));
    ScoreRow r;
    r.country = trim(row.fields[0]);
    if (r.country.empty()) throw ParseError(origin, row.line, "empty country name");
    const long year = parse_int(trim(row.fields[1]), origin, row.line);
    r.reading = parse_double(trim(row.fields[2]), origin, row.line);
    r.listening = parse_double(trim(row.fields[3]), origin, row.line);
    r.speaking = parse_double(trim(row.fields[4]), origin, row.line);
    r.writing = parse_double(trim(row.fields[5]), origin, row.line);
    r.total = parse_double(trim(row.fields[6]), origin, row.line);
    for (Skill s : kAllSkills) {
      const double v = r.score(s);
      if (v < 0.0 || v > skill_max_score(s))
        throw ParseError(origin, row.line,
                         std::string(skill_name(s)) + " score " + format_full(v) +
                             " out of range for " + r.country);
    }
    if (!seen.insert({static_cast<int>(year), r.country}).second)
      throw ParseError(origin, row.line, "duplicate country-year: " + r.country + " " +
                                             std::to_string(year));
    by_year[static_cast<int>(year)].push_back(std::move(r));
  }
  if (by_year.empty()) throw ParseError(origin, 0, "no score rows");

  std::vector<ScoreTable> tables;
  for (auto& [year, score_rows] : by_year)
    tables.push_back(ScoreTable::make(year, std::move(score_rows)));
  return tables;
}

std::vector<ScoreTable> parse_scores_csv(const std::string& path) {
  return parse_scores_string(csv::read_file(path), path);
}

std::string serialize_scores(const std::vector<ScoreTable>& tables) {
  std::string out = "country,year,reading,listening,speaking,writing,total\n";
  for (const ScoreTable& t : tables) {
    for (const ScoreRow& r : t.rows()) {
      csv::append_row(out, {r.country, std::to_string(t.year()), format_full(r.reading),
                            format_full(r.listening), format_full(r.speaking),
                            format_full(r.writing), format_full(r.total)});
    }
  }
  return out;
}

// ---- Country -> language map ---------------------------------------------

CountryLanguageMap parse_country_language_string(const std::string& text,
                                                 const std::string& origin) {
  const auto rows = csv::parse_string(text, origin);
  if (rows.empty()) throw ParseError(origin, 0, "missing header row");
  expect_header(rows[0], {"country", "language_code"}, origin);
  CountryLanguageMap map;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const csv::Row& row = rows[i];
    if (row.fields.size() != 2)
      throw ParseError(origin, row.line, "expected 2 columns");
    const std::string country = trim(row.fields[0]);
    const std::string code_raw = trim(row.fields[1]);
    if (country.empty() || code_raw.empty())
      throw ParseError(origin, row.line, "empty country or language code");
    std::string code;
    try {
      code = normalize_language_code(code_raw);
    } catch (const DomainError& e) {
      throw ParseError(origin, row.line, e.what());
    }
    if (!map.entries.emplace(country, code).second)
      throw ParseError(origin, row.line, "duplicate country '" + country + "'");
  }
  return map;
}

CountryLanguageMap parse_country_language_csv(const std::string& path) {
  return parse_country_language_string(csv::read_file(path), path);
}

// ---- Distance tables -------------------------------------------------------

DistanceSet parse_distances_string(const std::string& text, const std::string& origin) {
  const auto rows = csv::parse_string(text, origin);
  if (rows.empty()) throw ParseError(origin, 0, "missing header row");
  expect_header(rows[0], {"language", "family", "bert", "asjp", "tree"}, origin);

  std::vector<LanguageDistances> list;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const csv::Row& row = rows[i];
    if (row.fields.size() != 5)
      throw ParseError(origin, row.line, "expected 5 columns");
    std::string display = trim(row.fields[0]);
    if (display.empty()) throw ParseError(origin, row.line, "empty language");
    if (!display.empty())
      display[0] = static_cast<char>(std::toupper((unsigned char)display[0]));
    LanguageId id;
    try {
      id = LanguageId::make(trim(row.fields[0]), display, trim(row.fields[1]));
    } catch (const DomainError& e) {
      throw ParseError(origin, row.line, e.what());
    }
    auto cell = [&](int col, Method m) -> DistanceRecord {
      const std::string v = trim(row.fields[static_cast<std::size_t>(col)]);
      if (v.empty()) return DistanceRecord::missing(id, m);
      const double value = parse_double(v, origin, row.line);
      try {
        return DistanceRecord::present(id, m, value);
      } catch (const DomainError& e) {
        throw ParseError(origin, row.line, e.what());
      }
    };
    list.push_back(LanguageDistances{id, cell(2, Method::Embedding),
                                     cell(3, Method::Asjp), cell(4, Method::Tree)});
  }
  try {
    return DistanceSet(std::move(list));
  } catch (const DomainError& e) {
    throw ParseError(origin, 0, e.what());
  }
}

DistanceSet parse_distances_csv(const std::string& path) {
  return parse_distances_string(csv::read_file(path), path);
}

std::string serialize_distances(const DistanceSet& distances) {
  std::string out = "language,family,bert,asjp,tree\n";
  for (const LanguageDistances& l : distances.languages()) {
    auto cell = [](const DistanceRecord& r) {
      return r.is_missing() ? std::string() : format_fixed2(r.value());
    };
    csv::append_row(out, {l.language.code, l.language.family, cell(l.embedding),
                          cell(l.asjp), cell(l.tree)});
  }
  return out;
}

// ---- Phonetic word lists -----------------------------------------------------

asjp::Wordlist parse_wordlist_string(const std::string& text, const std::string& origin,
                                     LanguageId language) {
  const auto rows = csv::parse_string(text, origin);
  if (rows.empty()) throw ParseError(origin, 0, "missing header row");
  expect_header(rows[0], {"concept_id", "form"}, origin);
  std::map<int, std::vector<std::string>> items;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const csv::Row& row = rows[i];
    if (row.fields.size() != 2)
      throw ParseError(origin, row.line, "expected 2 columns");
    const long concept_id = parse_int(trim(row.fields[0]), origin, row.line);
    if (concept_id < 1 || concept_id > asjp::kConceptCount)
      throw ParseError(origin, row.line, "concept_id " + std::to_string(concept_id) +
                                             " outside 1..40");
    const std::string form = trim(row.fields[1]);
    if (!asjp::is_valid_form(form))
      throw ParseError(origin, row.line, "invalid phonetic form '" + form + "'");
    auto& forms = items[static_cast<int>(concept_id)];
    if (std::find(forms.begin(), forms.end(), form) == forms.end())
      forms.push_back(form);
  }
  if (items.empty()) throw ParseError(origin, 0, "word list has no concepts");
  return asjp::Wordlist::make(std::move(language), std::move(items));
}

asjp::Wordlist parse_wordlist_csv(const std::string& path,
                                  std::optional<LanguageId> language) {
  return parse_wordlist_string(csv::read_file(path), path,
                               language ? *language : language_from_stem(path));
}

// ---- Tree classifications ------------------------------------------------------

std::vector<tree::Classification> parse_classifications_string(const std::string& text,
                                                               const std::string& origin) {
  const auto rows = csv::parse_string(text, origin);
  if (rows.empty()) throw ParseError(origin, 0, "missing header row");
  expect_header(rows[0], {"language", "path"}, origin);
  std::vector<tree::Classification> list;
  std::set<std::string> seen;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const csv::Row& row = rows[i];
    if (row.fields.size() != 2)
      throw ParseError(origin, row.line, "expected 2 columns");
    std::vector<std::string> path;
    std::string segment;
    std::stringstream ss(row.fields[1]);
    while (std::getline(ss, segment, '>')) path.push_back(trim(segment));
    try {
      std::string display = trim(row.fields[0]);
      if (!display.empty())
        display[0] = static_cast<char>(std::toupper((unsigned char)display[0]));
      LanguageId id = LanguageId::make(trim(row.fields[0]), display,
                                       path.empty() ? "" : path.front());
      if (!seen.insert(id.code).second)
        throw DomainError("duplicate language '" + id.code + "'");
      list.push_back(tree::Classification::make(std::move(id), std::move(path)));
    } catch (const DomainError& e) {
      throw ParseError(origin, row.line, e.what());
    }
  }
  std::sort(list.begin(), list.end(),
            [](const tree::Classification& a, const tree::Classification& b) {
              return a.language().code < b.language().code;
            });
  return list;
}

std::vector<tree::Classification> parse_classifications_csv(const std::string& path) {
  return parse_classifications_string(csv::read_file(path), path);
}

std::string serialize_classifications(const std::vector<tree::Classification>& list) {
  std::string out = "language,path\n";
  for (const tree::Classification& c : list) {
    std::string path;
    for (std::size_t i = 0; i < c.path().size(); ++i) {
      if (i) path += '>';
      path += c.path()[i];
    }
    csv::append_row(out, {c.language().code, path});
  }
  return out;
}

// ---- Analysis manifest ----------------------------------------------------------

double default_cutline(Method m) {
  switch (m) {
    case Method::Embedding: return 0.19;
    case Method::Asjp: return 0.83;
    case Method::Tree: return 0.83;
  }
  return 0.0;
}

Manifest parse_manifest(const std::string& path) {
  const std::string text = csv::read_file(path);
  const fs::path base = fs::path(path).parent_path();
  auto resolve = [&](const std::string& p) {
    fs::path fp(p);
    return fp.is_absolute() ? fp.string() : (base / fp).string();
  };

  Manifest m;
  m.cutlines = {{Method::Embedding, default_cutline(Method::Embedding)},
                {Method::Asjp, default_cutline(Method::Asjp)},
                {Method::Tree, default_cutline(Method::Tree)}};
  bool saw_country_map = false;

  for (const auto& [line, line_no] : split_lines(text)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError(path, line_no, "expected 'key = value'");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ParseError(path, line_no, "empty key or value");

    if (key.rfind("scores.", 0) == 0) {
      const long year = parse_int(key.substr(7), path, line_no);
      if (!m.score_files.emplace(static_cast<int>(year), resolve(value)).second)
        throw ParseError(path, line_no, "duplicate key '" + key + "'");
    } else if (key == "country_map") {
      if (saw_country_map) throw ParseError(path, line_no, "duplicate key 'country_map'");
      m.country_map_file = resolve(value);
      saw_country_map = true;
    } else if (key == "distances") {
      if (value != "bundled") m.distances_file = resolve(value);
    } else if (key.rfind("cutline.", 0) == 0) {
      Method method;
      try {
        method = method_from_string(key.substr(8));
      } catch (const DomainError& e) {
        throw ParseError(path, line_no, e.what());
      }
      m.cutlines[method] = parse_double(value, path, line_no);
    } else if (key == "exclude_flagged") {
      if (value == "true") m.exclude_flagged = true;
      else if (value == "false") m.exclude_flagged = false;
      else throw ParseError(path, line_no, "exclude_flagged must be true or false");
    } else {
      throw ParseError(path, line_no, "unknown manifest key '" + key + "'");
    }
  }
  if (!saw_country_map) throw ParseError(path, 0, "manifest is missing 'country_map'");
  if (m.score_files.empty())
    throw ParseError(path, 0, "manifest names no score files (scores.<year> = <path>)");
  return m;
}

// ---- Frame assembly ---------------------------------------------------------------

double AnalysisFrame::Row::score(Skill s) const {
  switch (s) {
    case Skill::Reading: return reading;
    case Skill::Listening: return listening;
    case Skill::Speaking: return speaking;
    case Skill::Writing: return writing;
    case Skill::Total: return total;
  }
  return 0;
}

AnalysisFrame assemble_frame(const ScoreTable& scores, const CountryLanguageMap& map,
                             const DistanceSet& distances, Method method,
                             const AssembleOptions& options) {
  AnalysisFrame frame;
  frame.year = scores.year();
  frame.method = method;

  for (const ScoreRow& row : scores.rows()) {
    const auto it = map.entries.find(row.country);
    if (it == map.entries.end()) {
      frame.exclusions.push_back({row.country, "no language mapping"});
      continue;
    }
    const std::string& code = it->second;
    double distance_value = 0.0;
    if (code != options.identity_code) {
      const LanguageDistances* lang = distances.find(code);
      if (lang == nullptr) {
        frame.exclusions.push_back(
            {row.country, "unknown language '" + code + "' in distance data"});
        continue;
      }
      const DistanceRecord& record = lang->record(method);
      if (record.is_missing()) {
        frame.exclusions.push_back(
            {row.country, "missing " + std::string(method_name(method)) + " distance"});
        continue;
      }
      if (options.exclude_flagged && record.suspect()) {
        frame.exclusions.push_back(
            {row.country, "flagged " + std::string(method_name(method)) + " record"});
        continue;
      }
      distance_value = record.value();
    }
    AnalysisFrame::Row out;
    out.country = row.country;
    out.language_code = code;
    out.distance = distance_value;
    out.reading = row.reading;
    out.listening = row.listening;
    out.speaking = row.speaking;
    out.writing = row.writing;
    out.total = row.total;
    frame.rows.push_back(std::move(out));
  }
  // Score rows arrive sorted by country, so both outputs are already sorted.
  if (frame.rows.empty())
    throw DomainError("assembled frame is empty for year " +
                      std::to_string(scores.year()) + ", method " +
                      std::string(method_name(method)));
  return frame;
}

}  // namespace langdist::io
