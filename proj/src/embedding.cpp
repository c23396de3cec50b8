#include "langdist/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "langdist/compensated.hpp"
#include "langdist/errors.hpp"
#include "langdist/unicode.hpp"

namespace langdist::embed {

Table::Table(LanguageId language, int dim) : language_(std::move(language)), dim_(dim) {
  if (dim < 1) throw DomainError("embedding dimension must be positive");
}

void Table::add(std::string_view word, std::vector<double> vector) {
  const std::string key = uni::normalize_word(word);
  if (key.empty()) throw DomainError("empty word in embedding table");
  if (static_cast<int>(vector.size()) != dim_)
    throw DomainError("vector for '" + key + "' has " +
                      std::to_string(vector.size()) + " components, expected " +
                      std::to_string(dim_));
  bool all_zero = true;
  for (double v : vector) {
    if (!std::isfinite(v)) throw DomainError("non-finite component for '" + key + "'");
    if (v != 0.0) all_zero = false;
  }
  if (all_zero) throw DomainError("all-zero vector for '" + key + "'");
  if (!index_.emplace(key, words_.size()).second)
    throw DomainError("duplicate word '" + key + "' in embedding table");
  words_.push_back(key);
  data_.insert(data_.end(), vector.begin(), vector.end());
}

std::span<const double> Table::find(std::string_view word) const {
  auto it = index_.find(uni::normalize_word(word));
  if (it == index_.end()) return {};
  return vector_at(it->second);
}

std::span<const double> Table::vector_at(std::size_t index) const {
  return {data_.data() + index * static_cast<std::size_t>(dim_),
          static_cast<std::size_t>(dim_)};
}

Lexicon Lexicon::make(LanguageId source_language, LanguageId target_language,
                      std::vector<std::pair<std::string, std::string>> pairs) {
  Lexicon lex;
  lex.source_language_ = std::move(source_language);
  lex.target_language_ = std::move(target_language);
  std::set<std::pair<std::string, std::string>> seen;
  for (auto& [src, tgt] : pairs) {
    std::pair<std::string, std::string> p{uni::normalize_word(src),
                                          uni::normalize_word(tgt)};
    if (p.first.empty() || p.second.empty())
      throw DomainError("lexicon pair with an empty word");
    if (seen.insert(p).second) lex.pairs_.push_back(std::move(p));
  }
  if (lex.pairs_.empty()) throw DomainError("lexicon has no pairs");
  return lex;
}

double cosine_similarity(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size())
    throw DomainError("cosine similarity: dimension mismatch (" +
                      std::to_string(u.size()) + " vs " + std::to_string(v.size()) + ")");
  if (u.empty()) throw DomainError("cosine similarity of empty vectors");
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0)
    throw DomainError("cosine similarity of a zero-norm vector");
  return std::clamp(dot / (std::sqrt(nu) * std::sqrt(nv)), -1.0, 1.0);
}

SldResult semantic_similarity(const Lexicon& lexicon, const Table& source,
                              const Table& target) {
  if (source.language().code != lexicon.source_language().code)
    throw DomainError("source table language '" + source.language().code +
                      "' does not match lexicon source '" +
                      lexicon.source_language().code + "'");
  if (target.language().code != lexicon.target_language().code)
    throw DomainError("target table language '" + target.language().code +
                      "' does not match lexicon target '" +
                      lexicon.target_language().code + "'");
  if (source.dim() != target.dim())
    throw DomainError("embedding tables disagree on dimension (" +
                      std::to_string(source.dim()) + " vs " +
                      std::to_string(target.dim()) + ")");

  SldResult res;
  res.language = lexicon.source_language();
  res.pairs_total = static_cast<int>(lexicon.pairs().size());
  CompensatedSum sum;
  for (const auto& [src_word, tgt_word] : lexicon.pairs()) {
    const std::span<const double> u = source.find(src_word);
    const std::span<const double> v = target.find(tgt_word);
    if (u.empty() || v.empty()) {
      res.skipped.emplace_back(src_word, tgt_word);
      continue;
    }
    sum.add(cosine_similarity(u, v));
    ++res.pairs_covered;
  }
  if (res.pairs_covered == 0)
    throw DomainError("no lexicon pair is covered by the embedding tables");
  res.sls = sum.value() / res.pairs_covered;
  res.sld = 1.0 - res.sls;
  res.coverage = static_cast<double>(res.pairs_covered) / res.pairs_total;
  return res;
}

}  // namespace langdist::embed
