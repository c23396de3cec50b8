// Command-line front end: distance computation, score analysis, and table
// emission in CSV, Markdown, and JSON.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "langdist/asjp.hpp"
#include "langdist/bundled.hpp"
#include "langdist/embedding.hpp"
#include "langdist/errors.hpp"
#include "langdist/io.hpp"
#include "langdist/report.hpp"
#include "langdist/scores.hpp"
#include "langdist/tree.hpp"

namespace {

using namespace langdist;

struct CommonOutput {
  std::string format = "csv";
  std::string out_path;  // empty = stdout
};

void add_output_options(CLI::App* cmd, CommonOutput* out) {
  cmd->add_option("--format", out->format, "Output format: csv, markdown, json")
      ->check(CLI::IsMember({"csv", "markdown", "md", "json"}));
  cmd->add_option("--out", out->out_path, "Write the artifact to this file");
}

// Success output goes to stdout or --out; everything else is a log line on
// stderr, so artifacts stay machine-readable.
void emit(const report::Artifact& artifact, const CommonOutput& out) {
  const std::string text = report::render(artifact, report::format_from_string(out.format));
  if (out.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot write output file '" + out.out_path + "'");
  file << text;
}

std::optional<LanguageId> optional_language(const std::string& code) {
  if (code.empty()) return std::nullopt;
  return LanguageId::make(code);
}

tree::ProximityScale parse_scale(const std::vector<double>& values) {
  tree::ProximityScale scale;
  if (!values.empty()) {
    if (values.size() != scale.shared.size())
      throw DomainError("--scale needs exactly 5 proximity values (k = 0..4)");
    std::copy(values.begin(), values.end(), scale.shared.begin());
  }
  scale.validate();
  return scale;
}

int run(int argc, char** argv) {
  CLI::App app{"Inter-language distance measures and score-table analysis"};
  app.require_subcommand(1);

  // ---- dist ----
  CLI::App* dist = app.add_subcommand("dist", "Compute a language distance table");
  dist->require_subcommand(1);

  CLI::App* dist_embed = dist->add_subcommand(
      "embed", "Semantic distance from embedding tables and a bilingual lexicon");
  std::string embed_source, embed_target, embed_lexicon, embed_language,
      embed_target_language = "english";
  double min_coverage = 0.0;
  CommonOutput embed_out;
  dist_embed->add_option("--source-table", embed_source, "Source-language embedding file")
      ->required()->check(CLI::ExistingFile);
  dist_embed->add_option("--target-table", embed_target, "Target-language embedding file")
      ->required()->check(CLI::ExistingFile);
  dist_embed->add_option("--lexicon", embed_lexicon, "Bilingual lexicon (TSV)")
      ->required()->check(CLI::ExistingFile);
  dist_embed->add_option("--language", embed_language,
                         "Source language code (default: source file stem)");
  dist_embed->add_option("--target-language", embed_target_language,
                         "Target language code");
  dist_embed->add_option("--min-coverage", min_coverage,
                         "Fail when covered/total lexicon pairs fall below this")
      ->check(CLI::Range(0.0, 1.0));
  add_output_options(dist_embed, &embed_out);

  CLI::App* dist_asjp = dist->add_subcommand(
      "asjp", "Phonetic distance between a reference word list and others");
  std::vector<std::string> asjp_files;
  std::string asjp_synonyms = "min";
  CommonOutput asjp_out;
  dist_asjp->add_option("files", asjp_files,
                        "Reference word list followed by one or more targets")
      ->required()->check(CLI::ExistingFile);
  dist_asjp->add_option("--synonyms", asjp_synonyms,
                        "Synonym handling: min (best pair) or first")
      ->check(CLI::IsMember({"min", "first"}));
  add_output_options(dist_asjp, &asjp_out);

  CLI::App* dist_tree = dist->add_subcommand(
      "tree", "Family-tree distance from classification paths");
  std::string tree_file, tree_reference = "english";
  std::vector<double> tree_scale;
  CommonOutput tree_out;
  dist_tree->add_option("--classifications", tree_file,
                        "Classification CSV (default: bundled data)")
      ->check(CLI::ExistingFile);
  dist_tree->add_option("--reference", tree_reference, "Reference language code");
  dist_tree->add_option("--scale", tree_scale,
                        "Proximity for 0..4 shared branches (5 values)")
      ->expected(5);
  add_output_options(dist_tree, &tree_out);

  // ---- analyze ----
  CLI::App* analyze = app.add_subcommand("analyze", "Run the score-table analyses");
  analyze->require_subcommand(1);

  struct AnalyzeArgs {
    std::string manifest;
    std::string method = "all";
    bool exclude_flagged = false;
    double cutline = 0.0;
    CLI::Option* cutline_option = nullptr;
    CommonOutput out;
  };
  auto add_analyze_options = [](CLI::App* cmd, AnalyzeArgs* args, bool with_methods,
                                bool with_cutline) {
    cmd->add_option("--manifest", args->manifest, "Analysis manifest file")
        ->required()->check(CLI::ExistingFile);
    if (with_methods) {
      cmd->add_option("--method", args->method, "all, embed, asjp, or tree")
          ->check(CLI::IsMember({"all", "embed", "embedding", "asjp", "tree"}));
      cmd->add_flag("--exclude-flagged", args->exclude_flagged,
                    "Drop suspect-quality distance records");
    }
    if (with_cutline) {
      args->cutline_option =
          cmd->add_option("--cutline", args->cutline,
                          "Group cutline override (requires a single --method)");
    }
    add_output_options(cmd, &args->out);
  };

  AnalyzeArgs corr_args, manova_args, describe_args;
  CLI::App* analyze_corr = analyze->add_subcommand(
      "corr", "Distance vs score correlations with two-tailed significance");
  add_analyze_options(analyze_corr, &corr_args, true, false);
  CLI::App* analyze_manova = analyze->add_subcommand(
      "manova", "Two-group comparison per score column");
  add_analyze_options(analyze_manova, &manova_args, true, true);
  // describe joins scores with the country map only; no distance options
  CLI::App* analyze_describe = analyze->add_subcommand(
      "describe", "Per-year descriptive statistics of the mapped sample");
  add_analyze_options(analyze_describe, &describe_args, false, false);

  // ---- cefr ----
  CLI::App* cefr = app.add_subcommand("cefr", "Map a score to its CEFR band");
  std::string cefr_skill;
  double cefr_score = 0.0;
  CommonOutput cefr_out;
  cefr->add_option("skill", cefr_skill, "total, reading, listening, speaking, writing")
      ->required();
  cefr->add_option("score", cefr_score, "Score value")->required();
  add_output_options(cefr, &cefr_out);

  // ---- export-bundled ----
  CLI::App* export_bundled =
      app.add_subcommand("export-bundled", "Write the bundled data files");
  std::string export_dir = ".";
  export_bundled->add_option("--dir", export_dir, "Target directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  auto methods_for = [](const std::string& name) {
    std::vector<Method> methods;
    if (name == "all")
      methods.assign(std::begin(kAllMethods), std::end(kAllMethods));
    else
      methods.push_back(method_from_string(name));
    return methods;
  };

  if (dist_embed->parsed()) {
    const LanguageId source_lang =
        optional_language(embed_language)
            .value_or(LanguageId::make(
                std::filesystem::path(embed_source).stem().string()));
    const LanguageId target_lang = LanguageId::make(embed_target_language);
    const embed::Table source = io::parse_embedding_file(embed_source, source_lang);
    const embed::Table target = io::parse_embedding_file(embed_target, target_lang);
    const embed::Lexicon lexicon =
        io::parse_lexicon_tsv(embed_lexicon, source_lang, target_lang);
    const embed::SldResult result = embed::semantic_similarity(lexicon, source, target);
    for (const auto& [src, tgt] : result.skipped)
      std::cerr << "skipped out-of-vocabulary pair: " << src << " -> " << tgt << "\n";
    if (result.coverage < min_coverage)
      throw DomainError("lexicon coverage " + report::full_precision(result.coverage) +
                        " below required minimum " +
                        report::full_precision(min_coverage));
    emit(report::embed_artifact(result), embed_out);
    return 0;
  }

  if (dist_asjp->parsed()) {
    if (asjp_files.size() < 2)
      throw DomainError("dist asjp needs a reference word list and at least one target");
    const asjp::SynonymPolicy policy = asjp_synonyms == "first"
                                           ? asjp::SynonymPolicy::FirstFormOnly
                                           : asjp::SynonymPolicy::MinimumOverPairs;
    const asjp::Wordlist reference = io::parse_wordlist_csv(asjp_files[0]);
    std::vector<asjp::Result> results;
    for (std::size_t i = 1; i < asjp_files.size(); ++i) {
      const asjp::Wordlist target = io::parse_wordlist_csv(asjp_files[i]);
      results.push_back(asjp::ldnd(reference, target, policy));
    }
    emit(report::asjp_artifact(results), asjp_out);
    return 0;
  }

  if (dist_tree->parsed()) {
    const tree::ProximityScale scale = parse_scale(tree_scale);
    const std::vector<tree::Classification> classifications =
        tree_file.empty() ? bundled::tree_classifications()
                          : io::parse_classifications_csv(tree_file);
    const std::string reference = normalize_language_code(tree_reference);
    const std::vector<report::TreeRow> rows =
        report::tree_rows(classifications, reference, scale);
    emit(report::tree_artifact(rows, LanguageId::make(reference), scale), tree_out);
    return 0;
  }

  auto loaded_for = [&](AnalyzeArgs& args, const std::vector<Method>& methods) {
    io::Manifest manifest = io::parse_manifest(args.manifest);
    if (args.exclude_flagged) manifest.exclude_flagged = true;
    if (args.cutline_option != nullptr && args.cutline_option->count() > 0) {
      if (methods.size() != 1)
        throw DomainError("--cutline requires a single --method");
      manifest.cutlines[methods[0]] = args.cutline;
    }
    return report::load_manifest_data(manifest);
  };

  if (analyze_corr->parsed()) {
    const std::vector<Method> methods = methods_for(corr_args.method);
    emit(report::corr_artifact(loaded_for(corr_args, methods), methods), corr_args.out);
    return 0;
  }
  if (analyze_manova->parsed()) {
    const std::vector<Method> methods = methods_for(manova_args.method);
    emit(report::manova_artifact(loaded_for(manova_args, methods), methods),
         manova_args.out);
    return 0;
  }
  if (analyze_describe->parsed()) {
    const std::vector<Method> methods = methods_for(describe_args.method);
    emit(report::describe_artifact(loaded_for(describe_args, methods)),
         describe_args.out);
    return 0;
  }

  if (cefr->parsed()) {
    const Skill skill = skill_from_string(cefr_skill);
    const CefrLevel level = cefr_level(bundled::cefr_bands(), skill, cefr_score);
    emit(report::cefr_artifact(skill, cefr_score, level), cefr_out);
    return 0;
  }

  if (export_bundled->parsed()) {
    const std::vector<std::string> written = bundled::export_all(export_dir);
    for (const std::string& name : written)
      std::cerr << "wrote " << export_dir << "/" << name << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
