#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "langdist/language.hpp"

namespace langdist {

// Score columns, in the order the report tables print them.
enum class Skill { Reading, Listening, Speaking, Writing, Total };

inline constexpr Skill kAllSkills[] = {Skill::Reading, Skill::Listening,
                                       Skill::Speaking, Skill::Writing,
                                       Skill::Total};

std::string_view skill_name(Skill s);
Skill skill_from_string(std::string_view name);
double skill_max_score(Skill s);  // 30 for sections, 120 for total

struct ScoreRow {
  std::string country;
  std::string language_code;  // empty until joined with a country map
  double reading = 0, listening = 0, speaking = 0, writing = 0, total = 0;

  double score(Skill s) const;
};

// One year of per-country score means. Section scores are 0..30, total is
// 0..120; sections need not sum to the total (published tables round).
class ScoreTable {
 public:
  // Validates ranges and country uniqueness; rows are sorted by country.
  static ScoreTable make(int year, std::vector<ScoreRow> rows);

  int year() const { return year_; }
  const std::vector<ScoreRow>& rows() const { return rows_; }
  const ScoreRow* find(std::string_view country) const;

 private:
  int year_ = 0;
  std::vector<ScoreRow> rows_;
};

enum class CefrLevel { C2, C1, B2, B1, A2, BelowA2 };

std::string_view cefr_level_name(CefrLevel level);
// Band rank for monotonicity checks: BelowA2 = 0 ... C2 = 5.
int cefr_level_rank(CefrLevel level);

// Cut scores mapping test scores to CEFR bands. A cut may be absent
// (not applicable) for the lowest bands of some skills.
class CefrBands {
 public:
  using Cuts = std::array<std::optional<double>, 5>;  // indexed C2..A2

  // Validates that cuts strictly decrease from C2 downwards per skill.
  static CefrBands make(Cuts total, Cuts reading, Cuts listening, Cuts speaking,
                        Cuts writing);

  std::optional<double> cut(CefrLevel level, Skill skill) const;

 private:
  std::array<Cuts, 5> cuts_{};  // indexed by Skill
};

// Highest band whose cut score is <= score; BelowA2 when under every
// applicable cut. Throws DomainError when score is outside the skill range.
CefrLevel cefr_level(const CefrBands& bands, Skill skill, double score);

}  // namespace langdist
