#include "langdist/language.hpp"

#include <algorithm>
#include <cctype>

#include "langdist/errors.hpp"

namespace langdist {

std::string normalize_language_code(std::string_view code) {
  if (code.empty()) throw DomainError("language code must be non-empty");
  std::string out;
  out.reserve(code.size());
  for (char c : code) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u >= 0x80)
      throw DomainError("language code must be ASCII: '" + std::string(code) + "'");
    if (std::isspace(u) || c == ',' || c == '"')
      throw DomainError("language code contains whitespace or CSV metacharacter: '" +
                        std::string(code) + "'");
    out += static_cast<char>(std::tolower(u));
  }
  return out;
}

LanguageId LanguageId::make(std::string_view code, std::string_view display_name,
                            std::string_view family) {
  LanguageId id;
  id.code = normalize_language_code(code);
  id.display_name = std::string(display_name);
  id.family = std::string(family);
  return id;
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Embedding: return "embedding";
    case Method::Asjp: return "asjp";
    case Method::Tree: return "tree";
  }
  return "?";
}

Method method_from_string(std::string_view name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "embedding" || s == "embed" || s == "bert") return Method::Embedding;
  if (s == "asjp") return Method::Asjp;
  if (s == "tree") return Method::Tree;
  throw DomainError("unknown distance method: '" + std::string(name) + "'");
}

DistanceRecord DistanceRecord::present(LanguageId language, Method method,
                                       double value, RecordFlag flag) {
  bool ok = false;
  switch (method) {
    case Method::Embedding: ok = value >= 0.0 && value <= 2.0; break;
    case Method::Tree: ok = value >= 0.0 && value <= 1.0; break;
    case Method::Asjp: ok = value >= 0.0; break;
  }
  if (!ok)
    throw DomainError(std::string(method_name(method)) + " distance out of range for '" +
                      language.code + "'");
  return DistanceRecord(std::move(language), method, value, flag);
}

DistanceRecord DistanceRecord::missing(LanguageId language, Method method) {
  return DistanceRecord(std::move(language), method, std::nullopt, RecordFlag::Ok);
}

double DistanceRecord::value() const {
  if (!value_)
    throw DomainError("missing " + std::string(method_name(method_)) +
                      " distance for '" + language_.code + "' used in arithmetic");
  return *value_;
}

const DistanceRecord& LanguageDistances::record(Method m) const {
  switch (m) {
    case Method::Embedding: return embedding;
    case Method::Asjp: return asjp;
    case Method::Tree: return tree;
  }
  return embedding;  // unreachable
}

DistanceSet::DistanceSet(std::vector<LanguageDistances> languages)
    : languages_(std::move(languages)) {
  std::sort(languages_.begin(), languages_.end(),
            [](const LanguageDistances& a, const LanguageDistances& b) {
              return a.language.code < b.language.code;
            });
  for (std::size_t i = 1; i < languages_.size(); ++i)
    if (languages_[i].language.code == languages_[i - 1].language.code)
      throw DomainError("duplicate language in distance set: '" +
                        languages_[i].language.code + "'");
}

const LanguageDistances* DistanceSet::find(std::string_view code) const {
  auto it = std::lower_bound(languages_.begin(), languages_.end(), code,
                             [](const LanguageDistances& l, std::string_view c) {
                               return l.language.code < c;
                             });
  if (it != languages_.end() && it->language.code == code) return &*it;
  return nullptr;
}

}  // namespace langdist
