#include "langdist/scores.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "langdist/errors.hpp"

namespace langdist {

std::string_view skill_name(Skill s) {
  switch (s) {
    case Skill::Reading: return "reading";
    case Skill::Listening: return "listening";
    case Skill::Speaking: return "speaking";
    case Skill::Writing: return "writing";
    case Skill::Total: return "total";
  }
  return "?";
}

Skill skill_from_string(std::string_view name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "reading") return Skill::Reading;
  if (s == "listening") return Skill::Listening;
  if (s == "speaking") return Skill::Speaking;
  if (s == "writing") return Skill::Writing;
  if (s == "total") return Skill::Total;
  throw DomainError("unknown skill: '" + std::string(name) + "'");
}

double skill_max_score(Skill s) { return s == Skill::Total ? 120.0 : 30.0; }

double ScoreRow::score(Skill s) const {
  switch (s) {
    case Skill::Reading: return reading;
    case Skill::Listening: return listening;
    case Skill::Speaking: return speaking;
    case Skill::Writing: return writing;
    case Skill::Total: return total;
  }
  return 0;
}

ScoreTable ScoreTable::make(int year, std::vector<ScoreRow> rows) {
  ScoreTable t;
  t.year_ = year;
  for (const ScoreRow& r : rows) {
    if (r.country.empty()) throw DomainError("score row with empty country name");
    for (Skill s : kAllSkills) {
      double v = r.score(s);
      if (!std::isfinite(v) || v < 0.0 || v > skill_max_score(s))
        throw DomainError("score out of range for " + r.country + " " +
                          std::string(skill_name(s)));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const ScoreRow& a, const ScoreRow& b) {
    return a.country < b.country;
  });
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].country == rows[i - 1].country)
      throw DomainError("duplicate country '" + rows[i].country + "' in year " +
                        std::to_string(year));
  t.rows_ = std::move(rows);
  return t;
}

const ScoreRow* ScoreTable::find(std::string_view country) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), country,
                             [](const ScoreRow& r, std::string_view c) {
                               return r.country < c;
                             });
  if (it != rows_.end() && it->country == country) return &*it;
  return nullptr;
}

std::string_view cefr_level_name(CefrLevel level) {
  switch (level) {
    case CefrLevel::C2: return "C2";
    case CefrLevel::C1: return "C1";
    case CefrLevel::B2: return "B2";
    case CefrLevel::B1: return "B1";
    case CefrLevel::A2: return "A2";
    case CefrLevel::BelowA2: return "below-A2";
  }
  return "?";
}

int cefr_level_rank(CefrLevel level) {
  switch (level) {
    case CefrLevel::C2: return 5;
    case CefrLevel::C1: return 4;
    case CefrLevel::B2: return 3;
    case CefrLevel::B1: return 2;
    case CefrLevel::A2: return 1;
    case CefrLevel::BelowA2: return 0;
  }
  return -1;
}

namespace {
constexpr int skill_index(Skill s) { return static_cast<int>(s); }
constexpr int level_index(CefrLevel l) { return static_cast<int>(l); }  // C2=0..A2=4
}  // namespace

CefrBands CefrBands::make(Cuts total, Cuts reading, Cuts listening, Cuts speaking,
                          Cuts writing) {
  CefrBands b;
  b.cuts_[skill_index(Skill::Total)] = total;
  b.cuts_[skill_index(Skill::Reading)] = reading;
  b.cuts_[skill_index(Skill::Listening)] = listening;
  b.cuts_[skill_index(Skill::Speaking)] = speaking;
  b.cuts_[skill_index(Skill::Writing)] = writing;
  for (Skill s : kAllSkills) {
    const Cuts& cuts = b.cuts_[skill_index(s)];
    std::optional<double> prev;
    for (const std::optional<double>& c : cuts) {
      if (!c) continue;
      if (!std::isfinite(*c) || *c < 0.0 || *c > skill_max_score(s))
        throw DomainError("CEFR cut score out of range");
      if (prev && *c >= *prev)
        throw DomainError("CEFR cut scores must strictly decrease from C2 down");
      prev = c;
    }
  }
  return b;
}

std::optional<double> CefrBands::cut(CefrLevel level, Skill skill) const {
  if (level == CefrLevel::BelowA2) return std::nullopt;
  return cuts_[skill_index(skill)][level_index(level)];
}

CefrLevel cefr_level(const CefrBands& bands, Skill skill, double score) {
  if (!std::isfinite(score) || score < 0.0 || score > skill_max_score(skill))
    throw DomainError("score out of range for skill " + std::string(skill_name(skill)));
  for (CefrLevel level : {CefrLevel::C2, CefrLevel::C1, CefrLevel::B2,
                          CefrLevel::B1, CefrLevel::A2}) {
    std::optional<double> cut = bands.cut(level, skill);
    if (cut && score >= *cut) return level;
  }
  return CefrLevel::BelowA2;
}

}  // namespace langdist
