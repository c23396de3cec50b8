#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace langdist {

// Identifies a language across the whole toolkit. `code` is the unique key
// (non-empty ASCII, stored lowercase); `display_name` and `family` are
// presentation data and may be empty for user-supplied inputs.
struct LanguageId {
  std::string code;
  std::string display_name;
  std::string family;

  // Validates and case-normalizes the code. Throws DomainError.
  static LanguageId make(std::string_view code, std::string_view display_name = "",
                         std::string_view family = "");

  bool operator==(const LanguageId& other) const { return code == other.code; }
};

// Normalizes a bare code the same way LanguageId::make does.
std::string normalize_language_code(std::string_view code);

enum class Method { Embedding, Asjp, Tree };

inline constexpr Method kAllMethods[] = {Method::Embedding, Method::Asjp,
                                         Method::Tree};

std::string_view method_name(Method m);  // "embedding" | "asjp" | "tree"
// Accepts the canonical names plus the aliases used by file headers and the
// CLI ("embed", "bert").
Method method_from_string(std::string_view name);

enum class RecordFlag { Ok, Suspect };

// One (language, method) distance cell. Missing cells carry no value;
// asking for one throws, so gaps can never leak into arithmetic as 0/NaN.
class DistanceRecord {
 public:
  static DistanceRecord present(LanguageId language, Method method, double value,
                                RecordFlag flag = RecordFlag::Ok);
  static DistanceRecord missing(LanguageId language, Method method);

  const LanguageId& language() const { return language_; }
  Method method() const { return method_; }
  bool is_missing() const { return !value_.has_value(); }
  RecordFlag flag() const { return flag_; }
  bool suspect() const { return flag_ == RecordFlag::Suspect; }

  // Throws DomainError when the record is Missing.
  double value() const;

 private:
  DistanceRecord(LanguageId language, Method method, std::optional<double> value,
                 RecordFlag flag)
      : language_(std::move(language)), method_(method), value_(value), flag_(flag) {}

  LanguageId language_;
  Method method_;
  std::optional<double> value_;
  RecordFlag flag_;
};

// All three per-method records for one language.
struct LanguageDistances {
  LanguageId language;
  DistanceRecord embedding;
  DistanceRecord asjp;
  DistanceRecord tree;

  const DistanceRecord& record(Method m) const;
};

// Distance dataset keyed by language code, kept sorted by code so every
// iteration order is reproducible.
class DistanceSet {
 public:
  DistanceSet() = default;
  explicit DistanceSet(std::vector<LanguageDistances> languages);

  const std::vector<LanguageDistances>& languages() const { return languages_; }
  std::size_t size() const { return languages_.size(); }

  const LanguageDistances* find(std::string_view code) const;

 private:
  std::vector<LanguageDistances> languages_;
};

}  // namespace langdist
