#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "langdist/asjp.hpp"
#include "langdist/embedding.hpp"
#include "langdist/language.hpp"
#include "langdist/scores.hpp"
#include "langdist/tree.hpp"

namespace langdist::io {

// ---- Embedding tables -------------------------------------------------
//
// Text format: first line "n d" (two integers), then n lines
// "word v1 v2 ... vd" with space-separated decimal reals, UTF-8.
// Errors carry 1-based line numbers.

embed::Table parse_embedding_file(const std::string& path,
                                  std::optional<LanguageId> language = std::nullopt);
embed::Table parse_embedding_string(const std::string& text, const std::string& origin,
                                    LanguageId language);
std::string serialize_embedding(const embed::Table& table);

// ---- Bilingual lexicons ------------------------------------------------
//
// UTF-8 TSV, two columns (source word, target word), '#' comment lines.

embed::Lexicon parse_lexicon_tsv(const std::string& path, LanguageId source_language,
                                 LanguageId target_language);
embed::Lexicon parse_lexicon_string(const std::string& text, const std::string& origin,
                                    LanguageId source_language,
                                    LanguageId target_language);

// ---- Score tables ------------------------------------------------------
//
// CSV columns: country,year,reading,listening,speaking,writing,total.
// One ScoreTable per distinct year, ascending.

std::vector<ScoreTable> parse_scores_csv(const std::string& path);
std::vector<ScoreTable> parse_scores_string(const std::string& text,
                                            const std::string& origin);
std::string serialize_scores(const std::vector<ScoreTable>& tables);

// ---- Country -> language map -------------------------------------------
//
// CSV columns: country,language_code. Codes whose language is absent from
// the distance data are flagged at assembly, not here.

struct CountryLanguageMap {
  std::map<std::string, std::string> entries;  // country -> language code
};

CountryLanguageMap parse_country_language_csv(const std::string& path);
CountryLanguageMap parse_country_language_string(const std::string& text,
                                                 const std::string& origin);

// ---- Distance tables (bundled reference format) -------------------------
//
// CSV columns: language,family,bert,asjp,tree; an empty cell is a missing
// value. The serializer prints two decimals, the table convention.

DistanceSet parse_distances_csv(const std::string& path);
DistanceSet parse_distances_string(const std::string& text, const std::string& origin);
std::string serialize_distances(const DistanceSet& distances);

// ---- Phonetic word lists -------------------------------------------------
//
// CSV columns: concept_id (1..40), form; repeated concept rows are synonyms.
// The language defaults to the file stem when not given.

asjp::Wordlist parse_wordlist_csv(const std::string& path,
                                  std::optional<LanguageId> language = std::nullopt);
asjp::Wordlist parse_wordlist_string(const std::string& text, const std::string& origin,
                                     LanguageId language);

// ---- Tree classifications ------------------------------------------------
//
// CSV columns: language,path with '>'-separated path segments.

std::vector<tree::Classification> parse_classifications_csv(const std::string& path);
std::vector<tree::Classification> parse_classifications_string(
    const std::string& text, const std::string& origin);
std::string serialize_classifications(const std::vector<tree::Classification>& list);

// ---- Analysis manifest -----------------------------------------------------
//
// Key-value text file ('key = value', '#' comments):
//   scores.<year>  = <csv path>        one or more years
//   country_map    = <csv path>        required
//   distances      = bundled | <path>  default bundled
//   cutline.embedding|asjp|tree = <x>  optional overrides
//   exclude_flagged = true|false       optional
// Relative paths resolve against the manifest's directory.

struct Manifest {
  std::map<int, std::string> score_files;
  std::string country_map_file;
  std::optional<std::string> distances_file;  // absent = bundled reference data
  std::map<Method, double> cutlines;          // defaults filled in
  bool exclude_flagged = false;
};

Manifest parse_manifest(const std::string& path);

double default_cutline(Method m);  // embedding 0.19, asjp 0.83, tree 0.83

// ---- Frame assembly --------------------------------------------------------

struct Exclusion {
  std::string country;
  std::string reason;
};

struct AnalysisFrame {
  int year = 0;
  Method method = Method::Embedding;
  struct Row {
    std::string country;
    std::string language_code;
    double distance = 0.0;
    double reading = 0, listening = 0, speaking = 0, writing = 0, total = 0;

    double score(Skill s) const;
  };
  std::vector<Row> rows;          // sorted by country, no missing distances
  std::vector<Exclusion> exclusions;  // sorted by country, one per dropped row
};

struct AssembleOptions {
  // The language all distances are measured against; countries speaking it
  // join the frame with distance 0 for every method.
  std::string identity_code = "english";
  bool exclude_flagged = false;
};

// Inner join of score rows with distance records through the country map.
// Every score row lands either in `rows` or in `exclusions`. Throws when
// the frame comes out empty.
AnalysisFrame assemble_frame(const ScoreTable& scores, const CountryLanguageMap& map,
                             const DistanceSet& distances, Method method,
                             const AssembleOptions& options = {});

}  // namespace langdist::io
