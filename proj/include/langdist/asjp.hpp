#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "langdist/language.hpp"

namespace langdist::asjp {

// Permitted form characters. Base symbols are the ASCII letters plus the
// digits and punctuation the phonetic code assigns sounds to; the three
// modifier characters attach to the base symbol before them and the
// combined unit counts as a single symbol in edit operations.
inline constexpr std::string_view kBaseSymbols =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ3578!";
inline constexpr std::string_view kModifiers = "~$\"";

constexpr int kConceptCount = 40;

bool is_valid_form(std::string_view form);

// Splits a form into edit-distance symbols, folding each modifier into the
// preceding base symbol. Throws DomainError on an empty form, a character
// outside the permitted set, or a leading modifier.
std::vector<std::string> fold_segments(std::string_view form);

// Unit-cost edit distance over folded symbols. Empty strings allowed.
int levenshtein(std::string_view a, std::string_view b);

// Length-normalized distance: levenshtein / max(symbol count). Defined
// unless both forms are empty; always in [0, 1].
double ldn_pair(std::string_view a, std::string_view b);

// When a concept carries several synonym forms, either take the best
// (minimum) pairwise distance across the synonym combinations or compare
// only the first listed forms.
enum class SynonymPolicy { MinimumOverPairs, FirstFormOnly };

// 40-concept phonetically coded word list for one language. Concepts may
// be absent; each present concept has one or more non-empty forms.
class Wordlist {
 public:
  static Wordlist make(LanguageId language,
                       std::map<int, std::vector<std::string>> items);

  const LanguageId& language() const { return language_; }
  const std::map<int, std::vector<std::string>>& items() const { return items_; }
  int concepts_present() const { return static_cast<int>(items_.size()); }

 private:
  LanguageId language_;
  std::map<int, std::vector<std::string>> items_;
};

struct LdnStats {
  double ldn = 0.0;
  int concepts_used = 0;
};

// Mean aligned-concept distance over concepts present in both lists.
// Throws when the lists share no concept.
LdnStats ldn(const Wordlist& a, const Wordlist& b,
             SynonymPolicy policy = SynonymPolicy::MinimumOverPairs);

// Mean cross-concept distance over all m*(m-1) ordered pairs of distinct
// shared concepts; the chance-similarity baseline. Needs >= 2 shared
// concepts.
double global_divergence(const Wordlist& a, const Wordlist& b,
                         SynonymPolicy policy = SynonymPolicy::MinimumOverPairs);

struct Result {
  LanguageId language_a;
  LanguageId language_b;
  double ldn = 0.0;
  double global_divergence = 0.0;
  double ldnd = 0.0;
  int concepts_used = 0;
};

// Divided distance ldn / global_divergence. Throws on zero divergence
// (degenerate word lists) or zero shared concepts.
Result ldnd(const Wordlist& a, const Wordlist& b,
            SynonymPolicy policy = SynonymPolicy::MinimumOverPairs);

}  // namespace langdist::asjp
