#pragma once

#include <set>
#include <string>
#include <vector>

#include "langdist/io.hpp"
#include "langdist/language.hpp"
#include "langdist/scores.hpp"
#include "langdist/tree.hpp"

namespace langdist::bundled {

// Reference distances for 33 languages against English, shipped as CSV
// text embedded in the library. Two cells are missing (Burmese asjp,
// Serbian tree); the Serbian asjp value of 0.00 is linguistically
// implausible and carries a Suspect flag so analyses can drop it on
// request without losing the printed value.
const std::string& table1_csv();
const DistanceSet& table1();

// Family names occurring in the bundled distance data.
const std::set<std::string>& known_families();

// Family-tree paths tuned to reproduce every non-missing tree distance in
// the bundled table; includes the English reference row. Serbian has no
// entry (its tree cell is missing).
const std::string& tree_classifications_csv();
const std::vector<tree::Classification>& tree_classifications();

// Score-to-CEFR cut scores for the five report columns.
const CefrBands& cefr_bands();

// Small worked-example inputs: a five-country score year, the matching
// country map and manifest, a toy embedding pair with its lexicon, and two
// short phonetic word lists.
const std::string& demo_scores_csv();
const std::string& demo_country_language_csv();
const std::string& demo_manifest();
const std::string& demo_embedding_english();
const std::string& demo_embedding_german();
const std::string& demo_lexicon_german_english();
const std::string& demo_wordlist_english();
const std::string& demo_wordlist_german();

// Writes every asset above into `dir` (created if needed). Returns the
// relative file names written, sorted.
std::vector<std::string> export_all(const std::string& dir);

}  // namespace langdist::bundled
