#pragma once

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "langdist/language.hpp"

namespace langdist::embed {

// Per-language word-vector table. Words are unique after NFC + lowercase
// normalization; every vector has the table dimension and is not all-zero.
// Entry order is preserved so serialization is reproducible.
class Table {
 public:
  Table(LanguageId language, int dim);

  // Normalizes the word, validates the vector, rejects duplicates.
  void add(std::string_view word, std::vector<double> vector);

  const LanguageId& language() const { return language_; }
  int dim() const { return dim_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<std::string>& words() const { return words_; }

  // Looks up a word (normalized before the query); nullptr when absent.
  std::span<const double> find(std::string_view word) const;
  std::span<const double> vector_at(std::size_t index) const;

 private:
  LanguageId language_;
  int dim_;
  std::vector<std::string> words_;
  std::vector<double> data_;  // row-major, words_.size() x dim_
  std::unordered_map<std::string, std::size_t> index_;
};

// Aligned translation pairs for one language pair. Pairs are word-
// normalized and deduplicated at construction, keeping first-occurrence
// order (the summation order downstream).
class Lexicon {
 public:
  static Lexicon make(LanguageId source_language, LanguageId target_language,
                      std::vector<std::pair<std::string, std::string>> pairs);

  const LanguageId& source_language() const { return source_language_; }
  const LanguageId& target_language() const { return target_language_; }
  const std::vector<std::pair<std::string, std::string>>& pairs() const {
    return pairs_;
  }

 private:
  LanguageId source_language_;
  LanguageId target_language_;
  std::vector<std::pair<std::string, std::string>> pairs_;
};

// dot(u, v) / (|u| |v|), clamped to [-1, 1] after rounding. Throws on a
// length mismatch or a zero-norm vector.
double cosine_similarity(std::span<const double> u, std::span<const double> v);

struct SldResult {
  LanguageId language;       // the lexicon's source language
  double sls = 0.0;
  double sld = 0.0;          // 1 - sls, exactly
  int pairs_total = 0;
  int pairs_covered = 0;
  double coverage = 0.0;     // pairs_covered / pairs_total
  // Pairs skipped because either word is out of vocabulary.
  std::vector<std::pair<std::string, std::string>> skipped;
};

// Mean cosine similarity over every lexicon pair with both words in
// vocabulary, in lexicon order with compensated summation (bit-reproducible
// runs). Throws when no pair is covered, the tables' dimensions differ, or
// the tables do not match the lexicon's languages.
SldResult semantic_similarity(const Lexicon& lexicon, const Table& source,
                              const Table& target);

}  // namespace langdist::embed
