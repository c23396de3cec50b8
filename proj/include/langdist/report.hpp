#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "langdist/asjp.hpp"
#include "langdist/embedding.hpp"
#include "langdist/io.hpp"
#include "langdist/scores.hpp"
#include "langdist/stats.hpp"
#include "langdist/tree.hpp"

namespace langdist::report {

enum class Format { Csv, Markdown, Json };

Format format_from_string(std::string_view name);

// Presentation table for the csv and markdown renderers. The JSON side of
// an artifact always carries full-precision values; the table carries the
// the rounded report convention (distances 2 decimals, r/F/Sig 3).
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const TextTable& table);
std::string to_markdown(const TextTable& table);

struct Artifact {
  TextTable table;
  nlohmann::ordered_json json;
  // When set, csv/markdown render this single line instead of a table
  // (used by the cefr command, which prints just the band).
  std::string plain;
};

std::string render(const Artifact& artifact, Format format);

// Star band from the full-precision p value, never from a rounded one.
std::string significance_stars(double p);

std::string fixed(double value, int decimals);  // never emits "-0.000"
std::string full_precision(double value);

// ---- dist artifacts ---------------------------------------------------

Artifact embed_artifact(const embed::SldResult& result);
Artifact asjp_artifact(const std::vector<asjp::Result>& results);

struct TreeRow {
  LanguageId language;
  int shared_branches = 0;
  double distance = 0.0;
};
Artifact tree_artifact(const std::vector<TreeRow>& rows, const LanguageId& reference,
                       const tree::ProximityScale& scale);

// Distances of every classified language to the reference; throws when the
// reference is not in the list.
std::vector<TreeRow> tree_rows(const std::vector<tree::Classification>& classifications,
                               const std::string& reference_code,
                               const tree::ProximityScale& scale);

// ---- analyze artifacts --------------------------------------------------

// Everything a manifest names, loaded and validated once.
struct LoadedManifest {
  std::vector<ScoreTable> years;  // ascending year order
  io::CountryLanguageMap country_map;
  DistanceSet distances;
  std::map<Method, double> cutlines;
  bool exclude_flagged = false;
};

LoadedManifest load_manifest_data(const io::Manifest& manifest);

Artifact corr_artifact(const LoadedManifest& data, const std::vector<Method>& methods);
Artifact manova_artifact(const LoadedManifest& data, const std::vector<Method>& methods);
Artifact describe_artifact(const LoadedManifest& data);

Artifact cefr_artifact(Skill skill, double score, CefrLevel level);

}  // namespace langdist::report
