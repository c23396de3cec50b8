#pragma once

#include <array>
#include <string>
#include <vector>

#include "langdist/language.hpp"

namespace langdist::tree {

// Ordered family-tree path from the family root toward the language,
// e.g. Indo-European > Germanic > Northwest Germanic > Elbe Germanic.
class Classification {
 public:
  static Classification make(LanguageId language, std::vector<std::string> path);

  const LanguageId& language() const { return language_; }
  const std::vector<std::string>& path() const { return path_; }

 private:
  LanguageId language_;
  std::vector<std::string> path_;
};

// Proximity by shared-branch count k = 0..4 plus the same-language value.
// Counts above 4 for distinct languages clamp to the k = 4 band.
struct ProximityScale {
  std::array<double, 5> shared{0.0, 0.1, 0.25, 0.45, 0.7};
  double same_language = 1.0;

  static ProximityScale standard() { return ProximityScale{}; }
  // Throws unless proximity(0) = 0, values strictly increase in k, all stay
  // below same_language, and same_language = 1.
  void validate() const;
};

// Length of the longest common prefix of the two paths.
int shared_branches(const Classification& a, const Classification& b);

// 1 - proximity; identical LanguageId gives 0 regardless of paths.
double distance(const Classification& a, const Classification& b,
                const ProximityScale& scale = ProximityScale::standard());

}  // namespace langdist::tree
