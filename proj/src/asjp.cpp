#include "langdist/asjp.hpp"

#include <algorithm>
#include <limits>

#include "langdist/compensated.hpp"
#include "langdist/errors.hpp"

namespace langdist::asjp {

namespace {

bool is_base(char c) { return kBaseSymbols.find(c) != std::string_view::npos; }
bool is_modifier(char c) { return kModifiers.find(c) != std::string_view::npos; }

}  // namespace

bool is_valid_form(std::string_view form) {
  if (form.empty()) return false;
  if (is_modifier(form.front())) return false;
  for (char c : form)
    if (!is_base(c) && !is_modifier(c)) return false;
  return true;
}

std::vector<std::string> fold_segments(std::string_view form) {
  if (form.empty()) throw DomainError("empty phonetic form");
  std::vector<std::string> segments;
  for (char c : form) {
    if (is_base(c)) {
      segments.emplace_back(1, c);
    } else if (is_modifier(c)) {
      if (segments.empty())
        throw DomainError("modifier with no preceding symbol in form '" +
                          std::string(form) + "'");
      segments.back() += c;
    } else {
      throw DomainError("character not in the phonetic symbol set in form '" +
                        std::string(form) + "'");
    }
  }
  return segments;
}

int levenshtein(std::string_view a, std::string_view b) {
  const std::vector<std::string> sa = a.empty() ? std::vector<std::string>{}
                                                : fold_segments(a);
  const std::vector<std::string> sb = b.empty() ? std::vector<std::string>{}
                                                : fold_segments(b);
  // Two rolling rows over the shorter side.
  const std::vector<std::string>& longer = sa.size() >= sb.size() ? sa : sb;
  const std::vector<std::string>& shorter = sa.size() >= sb.size() ? sb : sa;
  const int m = static_cast<int>(shorter.size());

  std::vector<int> prev(m + 1), cur(m + 1);
  for (int j = 0; j <= m; ++j) prev[j] = j;
  for (int i = 1; i <= static_cast<int>(longer.size()); ++i) {
    cur[0] = i;
    for (int j = 1; j <= m; ++j) {
      const int sub = prev[j - 1] + (longer[i - 1] == shorter[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

double ldn_pair(std::string_view a, std::string_view b) {
  if (a.empty() && b.empty())
    throw DomainError("ldn_pair undefined for two empty forms");
  const std::size_t la = a.empty() ? 0 : fold_segments(a).size();
  const std::size_t lb = b.empty() ? 0 : fold_segments(b).size();
  return static_cast<double>(levenshtein(a, b)) /
         static_cast<double>(std::max(la, lb));
}

Wordlist Wordlist::make(LanguageId language,
                        std::map<int, std::vector<std::string>> items) {
  for (const auto& [concept_id, forms] : items) {
    if (concept_id < 1 || concept_id > kConceptCount)
      throw DomainError("concept id " + std::to_string(concept_id) +
                        " outside 1.." + std::to_string(kConceptCount) + " for '" +
                        language.code + "'");
    if (forms.empty())
      throw DomainError("concept " + std::to_string(concept_id) + " has no forms");
    for (const std::string& f : forms)
      if (!is_valid_form(f))
        throw DomainError("invalid phonetic form '" + f + "' for concept " +
                          std::to_string(concept_id) + " of '" + language.code + "'");
  }
  Wordlist w;
  w.language_ = std::move(language);
  w.items_ = std::move(items);
  return w;
}

namespace {

// Distance between two synonym sets under the chosen policy.
double form_set_distance(const std::vector<std::string>& fa,
                         const std::vector<std::string>& fb,
                         SynonymPolicy policy) {
  if (policy == SynonymPolicy::FirstFormOnly)
    return ldn_pair(fa.front(), fb.front());
  double best = std::numeric_limits<double>::infinity();
  for (const std::string& a : fa)
    for (const std::string& b : fb) best = std::min(best, ldn_pair(a, b));
  return best;
}

std::vector<int> shared_concepts(const Wordlist& a, const Wordlist& b) {
  std::vector<int> shared;
  for (const auto& [concept_id, forms] : a.items())
    if (b.items().count(concept_id)) shared.push_back(concept_id);
  return shared;  // ascending: std::map iteration order
}

}  // namespace

LdnStats ldn(const Wordlist& a, const Wordlist& b, SynonymPolicy policy) {
  const std::vector<int> shared = shared_concepts(a, b);
  if (shared.empty())
    throw DomainError("no shared concepts between '" + a.language().code +
                      "' and '" + b.language().code + "'");
  CompensatedSum sum;
  for (int concept_id : shared)
    sum.add(form_set_distance(a.items().at(concept_id), b.items().at(concept_id), policy));
  return {sum.value() / static_cast<double>(shared.size()),
          static_cast<int>(shared.size())};
}

double global_divergence(const Wordlist& a, const Wordlist& b, SynonymPolicy policy) {
  const std::vector<int> shared = shared_concepts(a, b);
  if (shared.size() < 2)
    throw DomainError("global divergence needs at least 2 shared concepts "
                      "between '" + a.language().code + "' and '" +
                      b.language().code + "'");
  CompensatedSum sum;
  std::size_t pairs = 0;
  for (int ci : shared) {
    for (int cj : shared) {
      if (ci == cj) continue;
      sum.add(form_set_distance(a.items().at(ci), b.items().at(cj), policy));
      ++pairs;
    }
  }
  return sum.value() / static_cast<double>(pairs);
}

Result ldnd(const Wordlist& a, const Wordlist& b, SynonymPolicy policy) {
  Result res;
  res.language_a = a.language();
  res.language_b = b.language();
  const LdnStats local = ldn(a, b, policy);
  res.ldn = local.ldn;
  res.concepts_used = local.concepts_used;
  res.global_divergence = global_divergence(a, b, policy);
  if (res.global_divergence <= 0.0)
    throw DomainError("zero global divergence between '" + a.language().code +
                      "' and '" + b.language().code + "' (degenerate word lists)");
  res.ldnd = res.ldn / res.global_divergence;
  return res;
}

}  // namespace langdist::asjp
