#include "langdist/tree.hpp"

#include <algorithm>
#include <cmath>

#include "langdist/errors.hpp"

namespace langdist::tree {

Classification Classification::make(LanguageId language,
                                    std::vector<std::string> path) {
  if (path.empty())
    throw DomainError("empty classification path for '" + language.code + "'");
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i].empty())
      throw DomainError("empty branch name in classification of '" +
                        language.code + "'");
    if (i > 0 && path[i] == path[i - 1])
      throw DomainError("repeated adjacent branch '" + path[i] +
                        "' in classification of '" + language.code + "'");
  }
  Classification c;
  c.language_ = std::move(language);
  c.path_ = std::move(path);
  return c;
}

void ProximityScale::validate() const {
  if (same_language != 1.0)
    throw DomainError("proximity scale: same-language proximity must be 1");
  if (shared[0] != 0.0)
    throw DomainError("proximity scale: zero shared branches must map to 0");
  for (std::size_t k = 1; k < shared.size(); ++k) {
    if (!std::isfinite(shared[k]) || shared[k] <= shared[k - 1])
      throw DomainError("proximity scale must strictly increase with shared branches");
  }
  if (shared.back() >= same_language)
    throw DomainError("proximity scale: distinct languages must stay below 1");
}

int shared_branches(const Classification& a, const Classification& b) {
  const std::size_t limit = std::min(a.path().size(), b.path().size());
  std::size_t k = 0;
  while (k < limit && a.path()[k] == b.path()[k]) ++k;
  return static_cast<int>(k);
}

double distance(const Classification& a, const Classification& b,
                const ProximityScale& scale) {
  scale.validate();
  if (a.language() == b.language()) return 0.0;
  const int k = std::min<int>(shared_branches(a, b),
                              static_cast<int>(scale.shared.size()) - 1);
  return 1.0 - scale.shared[static_cast<std::size_t>(k)];
}

}  // namespace langdist::tree
