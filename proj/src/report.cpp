#include "langdist/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "langdist/bundled.hpp"
#include "langdist/csv.hpp"
#include "langdist/errors.hpp"

namespace langdist::report {

using nlohmann::ordered_json;

Format format_from_string(std::string_view name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower((unsigned char)c));
  if (s == "csv") return Format::Csv;
  if (s == "markdown" || s == "md") return Format::Markdown;
  if (s == "json") return Format::Json;
  throw DomainError("unknown output format: '" + std::string(name) + "'");
}

std::string to_csv(const TextTable& table) {
  std::string out;
  csv::append_row(out, table.header);
  for (const auto& row : table.rows) csv::append_row(out, row);
  return out;
}

namespace {

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

ordered_json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;  // JSON has no inf/nan
  return v;
}

ordered_json exclusions_json(const std::vector<io::Exclusion>& exclusions) {
  ordered_json arr = ordered_json::array();
  for (const io::Exclusion& e : exclusions)
    arr.push_back({{"country", e.country}, {"reason", e.reason}});
  return arr;
}

}  // namespace

std::string to_markdown(const TextTable& table) {
  std::string out = "|";
  for (const std::string& h : table.header) out += " " + md_escape(h) + " |";
  out += "\n|";
  for (std::size_t i = 0; i < table.header.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& row : table.rows) {
    out += "|";
    for (const std::string& cell : row) out += " " + md_escape(cell) + " |";
    out += "\n";
  }
  return out;
}

std::string render(const Artifact& artifact, Format format) {
  switch (format) {
    case Format::Json: return artifact.json.dump(2) + "\n";
    case Format::Markdown:
      if (!artifact.plain.empty()) return artifact.plain + "\n";
      return to_markdown(artifact.table);
    case Format::Csv:
      if (!artifact.plain.empty()) return artifact.plain + "\n";
      return to_csv(artifact.table);
  }
  return {};
}

std::string significance_stars(double p) {
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "";
}

std::string fixed(double value, int decimals) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s = buf;
  // -0.000 carries no information; print the unsigned form.
  if (s.size() > 1 && s[0] == '-' &&
      s.find_first_not_of("0.", 1) == std::string::npos)
    s.erase(0, 1);
  return s;
}

std::string full_precision(double value) {
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return std::string(buf, ptr);
}

// ---- dist artifacts -------------------------------------------------------

Artifact embed_artifact(const embed::SldResult& r) {
  Artifact a;
  a.table.header = {"language", "method", "value", "coverage", "pairs_covered",
                    "pairs_total"};
  a.table.rows.push_back({r.language.code, "embedding", fixed(r.sld, 2),
                          fixed(r.coverage, 4), std::to_string(r.pairs_covered),
                          std::to_string(r.pairs_total)});
  ordered_json skipped = ordered_json::array();
  for (const auto& [src, tgt] : r.skipped)
    skipped.push_back({{"source", src}, {"target", tgt}});
  a.json = {{"command", "dist embed"},
            {"rows", ordered_json::array({{{"language", r.language.code},
                                           {"method", "embedding"},
                                           {"value", json_number(r.sld)},
                                           {"sls", json_number(r.sls)},
                                           {"coverage", json_number(r.coverage)},
                                           {"pairs_covered", r.pairs_covered},
                                           {"pairs_total", r.pairs_total},
                                           {"skipped", skipped}}})}};
  return a;
}

Artifact asjp_artifact(const std::vector<asjp::Result>& results) {
  Artifact a;
  a.table.header = {"language", "method", "value"};
  ordered_json rows = ordered_json::array();
  for (const asjp::Result& r : results) {
    a.table.rows.push_back({r.language_b.code, "asjp", fixed(r.ldnd, 2)});
    rows.push_back({{"language", r.language_b.code},
                    {"method", "asjp"},
                    {"value", json_number(r.ldnd)},
                    {"reference", r.language_a.code},
                    {"ldn", json_number(r.ldn)},
                    {"global_divergence", json_number(r.global_divergence)},
                    {"concepts_used", r.concepts_used}});
  }
  a.json = {{"command", "dist asjp"}, {"rows", rows}};
  return a;
}

std::vector<TreeRow> tree_rows(const std::vector<tree::Classification>& classifications,
                               const std::string& reference_code,
                               const tree::ProximityScale& scale) {
  const tree::Classification* reference = nullptr;
  for (const tree::Classification& c : classifications)
    if (c.language().code == reference_code) reference = &c;
  if (reference == nullptr)
    throw DomainError("reference language '" + reference_code +
                      "' is not in the classification file");
  std::vector<TreeRow> rows;
  for (const tree::Classification& c : classifications) {
    if (c.language().code == reference_code) continue;
    TreeRow row;
    row.language = c.language();
    row.shared_branches = tree::shared_branches(*reference, c);
    row.distance = tree::distance(*reference, c, scale);
    rows.push_back(std::move(row));
  }
  return rows;
}

Artifact tree_artifact(const std::vector<TreeRow>& rows, const LanguageId& reference,
                       const tree::ProximityScale& scale) {
  Artifact a;
  a.table.header = {"language", "method", "value"};
  ordered_json jrows = ordered_json::array();
  for (const TreeRow& r : rows) {
    a.table.rows.push_back({r.language.code, "tree", fixed(r.distance, 2)});
    jrows.push_back({{"language", r.language.code},
                     {"method", "tree"},
                     {"value", json_number(r.distance)},
                     {"shared_branches", r.shared_branches}});
  }
  ordered_json jscale = ordered_json::array();
  for (double v : scale.shared) jscale.push_back(v);
  a.json = {{"command", "dist tree"},
            {"reference", reference.code},
            {"proximity_scale", jscale},
            {"rows", jrows}};
  return a;
}

// ---- analyze artifacts --------------------------------------------------------

LoadedManifest load_manifest_data(const io::Manifest& manifest) {
  LoadedManifest data;
  for (const auto& [year, file] : manifest.score_files) {
    const std::vector<ScoreTable> tables = io::parse_scores_csv(file);
    const ScoreTable* match = nullptr;
    for (const ScoreTable& t : tables)
      if (t.year() == year) match = &t;
    if (match == nullptr)
      throw DomainError("score file '" + file + "' has no rows for year " +
                        std::to_string(year));
    data.years.push_back(*match);
  }
  data.country_map = io::parse_country_language_csv(manifest.country_map_file);
  data.distances = manifest.distances_file
                       ? io::parse_distances_csv(*manifest.distances_file)
                       : bundled::table1();
  data.cutlines = manifest.cutlines;
  data.exclude_flagged = manifest.exclude_flagged;
  return data;
}

namespace {

io::AnalysisFrame frame_for(const LoadedManifest& data, const ScoreTable& year,
                            Method method) {
  io::AssembleOptions options;
  options.exclude_flagged = data.exclude_flagged;
  return io::assemble_frame(year, data.country_map, data.distances, method, options);
}

std::string analysis_context(int year, Method method) {
  return "year " + std::to_string(year) + ", method " +
         std::string(method_name(method));
}

}  // namespace

Artifact corr_artifact(const LoadedManifest& data, const std::vector<Method>& methods) {
  Artifact a;
  a.table.header = {"year", "method", "variable", "n", "r", "p", "stars"};
  ordered_json results = ordered_json::array();

  for (const ScoreTable& year : data.years) {
    for (Method method : methods) {
      const io::AnalysisFrame frame = frame_for(data, year, method);
      std::vector<double> distance;
      distance.reserve(frame.rows.size());
      for (const auto& row : frame.rows) distance.push_back(row.distance);

      ordered_json correlations = ordered_json::array();
      for (Skill skill : kAllSkills) {
        std::vector<double> scores;
        scores.reserve(frame.rows.size());
        for (const auto& row : frame.rows) scores.push_back(row.score(skill));
        PearsonResult p;
        try {
          p = pearson(distance, scores);
        } catch (const DomainError& e) {
          throw DomainError(std::string(e.what()) + " (" +
                            analysis_context(year.year(), method) + ", " +
                            std::string(skill_name(skill)) + ")");
        }
        const std::string stars = significance_stars(p.p_two_tailed);
        a.table.rows.push_back({std::to_string(year.year()),
                                std::string(method_name(method)),
                                std::string(skill_name(skill)), std::to_string(p.n),
                                fixed(p.r, 3), fixed(p.p_two_tailed, 3), stars});
        correlations.push_back({{"variable", skill_name(skill)},
                                {"r", json_number(p.r)},
                                {"t", json_number(p.t_stat)},
                                {"p", json_number(p.p_two_tailed)},
                                {"stars", stars}});
      }
      results.push_back({{"year", year.year()},
                         {"method", method_name(method)},
                         {"n", static_cast<int>(frame.rows.size())},
                         {"exclusions", exclusions_json(frame.exclusions)},
                         {"correlations", correlations}});
    }
  }
  a.json = {{"command", "analyze corr"}, {"results", results}};
  return a;
}

Artifact manova_artifact(const LoadedManifest& data, const std::vector<Method>& methods) {
  Artifact a;
  a.table.header = {"year", "method", "variable", "mean_a", "mean_b", "f", "sig"};
  ordered_json results = ordered_json::array();

  for (const ScoreTable& year : data.years) {
    for (Method method : methods) {
      const io::AnalysisFrame frame = frame_for(data, year, method);
      const double cutline = data.cutlines.at(method);
      std::vector<std::pair<std::string, double>> distances;
      distances.reserve(frame.rows.size());
      for (const auto& row : frame.rows) distances.emplace_back(row.country, row.distance);

      ManovaResult m;
      GroupAssignment groups;
      try {
        groups = split_groups(method, distances, cutline);
        m = manova(groups, year);
      } catch (const DomainError& e) {
        throw DomainError(std::string(e.what()) + " (" +
                          analysis_context(year.year(), method) + ")");
      }

      // Per-variable rows in report order, plus assumption checks.
      ordered_json variables = ordered_json::array();
      ordered_json qq = ordered_json::array();
      for (const ManovaVariable& v : m.variables) {
        a.table.rows.push_back({std::to_string(year.year()),
                                std::string(method_name(method)),
                                std::string(skill_name(v.skill)), fixed(v.mean_a, 2),
                                fixed(v.mean_b, 2), fixed(v.f, 3), fixed(v.p, 3)});
        std::vector<double> va, vb, all;
        for (const auto& [country, group] : groups.groups) {
          const ScoreRow* row = year.find(country);
          const double value = row->score(v.skill);
          (group == Group::A ? va : vb).push_back(value);
          all.push_back(value);
        }
        try {
          const LeveneResult lev = levene(va, vb);
          variables.push_back({{"variable", skill_name(v.skill)},
                               {"mean_a", json_number(v.mean_a)},
                               {"mean_b", json_number(v.mean_b)},
                               {"f", json_number(v.f)},
                               {"p", json_number(v.p)},
                               {"levene_w", json_number(lev.w)},
                               {"levene_p", json_number(lev.p)}});
          ordered_json points = ordered_json::array();
          for (const auto& [theoretical, sample] : qq_data(all))
            points.push_back(ordered_json::array({theoretical, sample}));
          qq.push_back({{"variable", skill_name(v.skill)}, {"points", points}});
        } catch (const DomainError& e) {
          throw DomainError(std::string(e.what()) + " (" +
                            analysis_context(year.year(), method) + ", " +
                            std::string(skill_name(v.skill)) + ")");
        }
      }

      ordered_json assignment = ordered_json::array();
      for (const auto& [country, group] : groups.groups)
        assignment.push_back({{"country", country},
                              {"group", group == Group::A ? "A" : "B"}});
      ordered_json wilks = nullptr;
      if (m.overall) {
        wilks = {{"lambda", json_number(m.overall->lambda)},
                 {"f", json_number(m.overall->f_approx)},
                 {"p", json_number(m.overall->p)},
                 {"df1", m.overall->df1},
                 {"df2", m.overall->df2}};
      }
      results.push_back({{"year", year.year()},
                         {"method", method_name(method)},
                         {"cutline", cutline},
                         {"n_a", m.n_a},
                         {"n_b", m.n_b},
                         {"assignment", assignment},
                         {"exclusions", exclusions_json(frame.exclusions)},
                         {"variables", variables},
                         {"wilks", wilks},
                         {"qq", qq}});
    }
  }
  a.json = {{"command", "analyze manova"}, {"results", results}};
  return a;
}

Artifact describe_artifact(const LoadedManifest& data) {
  Artifact a;
  a.table.header = {"year", "variable", "n", "mean", "sd"};
  ordered_json results = ordered_json::array();

  for (const ScoreTable& year : data.years) {
    // The described sample is the mapped countries: the study roster is
    // defined by the country map, not by distance coverage.
    std::vector<const ScoreRow*> rows;
    for (const ScoreRow& row : year.rows())
      if (data.country_map.entries.count(row.country)) rows.push_back(&row);
    if (rows.empty())
      throw DomainError("no mapped countries in year " + std::to_string(year.year()));

    ordered_json variables = ordered_json::array();
    for (Skill skill : kAllSkills) {
      std::vector<double> values;
      values.reserve(rows.size());
      for (const ScoreRow* row : rows) values.push_back(row->score(skill));
      const Descriptives d = descriptives(values);
      a.table.rows.push_back({std::to_string(year.year()),
                              std::string(skill_name(skill)), std::to_string(d.n),
                              fixed(d.mean, 2),
                              d.sd ? fixed(*d.sd, 3) : std::string("")});
      variables.push_back({{"variable", skill_name(skill)},
                           {"n", d.n},
                           {"mean", json_number(d.mean)},
                           {"sd", d.sd ? json_number(*d.sd) : ordered_json(nullptr)}});
    }
    results.push_back({{"year", year.year()},
                       {"n", static_cast<int>(rows.size())},
                       {"variables", variables}});
  }
  a.json = {{"command", "analyze describe"}, {"results", results}};
  return a;
}

Artifact cefr_artifact(Skill skill, double score, CefrLevel level) {
  Artifact a;
  a.plain = std::string(cefr_level_name(level));
  a.table.header = {"skill", "score", "level"};
  a.table.rows.push_back({std::string(skill_name(skill)), full_precision(score),
                          std::string(cefr_level_name(level))});
  a.json = {{"command", "cefr"},
            {"skill", skill_name(skill)},
            {"score", score},
            {"level", cefr_level_name(level)}};
  return a;
}

}  // namespace langdist::report
