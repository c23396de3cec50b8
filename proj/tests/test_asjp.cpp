#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "langdist/asjp.hpp"
#include "langdist/compensated.hpp"
#include "langdist/errors.hpp"

using namespace langdist;

namespace {

std::string random_form(std::mt19937& rng, int max_len) {
  static const std::string symbols = "pbmfvtdszcnSZCjTkgxNqGXhlLwyr3578!Eaeiou";
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  std::string s;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) s += symbols[pick(rng)];
  return s;
}

asjp::Wordlist make_list(const std::string& code,
                         std::map<int, std::vector<std::string>> items) {
  return asjp::Wordlist::make(LanguageId::make(code), std::move(items));
}

}  // namespace

TEST_CASE("segment folding attaches modifiers to the preceding symbol") {
  CHECK(asjp::fold_segments("abc") == std::vector<std::string>{"a", "b", "c"});
  CHECK(asjp::fold_segments("ab~c") == std::vector<std::string>{"a", "b~", "c"});
  CHECK(asjp::fold_segments("a$\"b") == std::vector<std::string>{"a$\"", "b"});
  CHECK_THROWS_AS(asjp::fold_segments("~ab"), DomainError);
  CHECK_THROWS_AS(asjp::fold_segments(""), DomainError);
  CHECK_THROWS_AS(asjp::fold_segments("a b"), DomainError);
}

TEST_CASE("form validation") {
  CHECK(asjp::is_valid_form("wataSi"));
  CHECK(asjp::is_valid_form("tu8"));
  CHECK(asjp::is_valid_form("ab~"));
  CHECK_FALSE(asjp::is_valid_form(""));
  CHECK_FALSE(asjp::is_valid_form("~a"));
  CHECK_FALSE(asjp::is_valid_form("a-b"));
  CHECK_FALSE(asjp::is_valid_form("a b"));
}

TEST_CASE("levenshtein base cases and the worked example") {
  CHECK(asjp::levenshtein("abc", "abc") == 0);
  CHECK(asjp::levenshtein("", "abc") == 3);
  CHECK(asjp::levenshtein("abc", "") == 3);
  CHECK(asjp::levenshtein("", "") == 0);
  // hand-built DP table: substitute E->w, insert a, t, a, S, keep i
  CHECK(asjp::levenshtein("Ei", "wataSi") == 5);
}

TEST_CASE("levenshtein counts folded units, not characters") {
  // "ab~" is two symbols: 'a' and 'b~'; "ab" differs in the second symbol only.
  CHECK(asjp::levenshtein("ab~", "ab") == 1);
  CHECK(asjp::levenshtein("ab~", "ab~") == 0);
  // A modifier makes symbols distinct.
  CHECK(asjp::levenshtein("a", "a~") == 1);
}

TEST_CASE("levenshtein is a metric on random forms") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 3000; ++iter) {
    const std::string a = random_form(rng, 12);
    const std::string b = random_form(rng, 12);
    const std::string c = random_form(rng, 12);
    const int ab = asjp::levenshtein(a, b);
    const int ba = asjp::levenshtein(b, a);
    const int ac = asjp::levenshtein(a, c);
    const int cb = asjp::levenshtein(c, b);
    CHECK(ab == ba);
    CHECK(ab >= 0);
    CHECK(asjp::levenshtein(a, a) == 0);
    CHECK(ab <= ac + cb);
  }
}

TEST_CASE("ldn_pair examples and bounds") {
  CHECK(asjp::ldn_pair("abc", "abc") == 0.0);
  CHECK(asjp::ldn_pair("Ei", "wataSi") == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(asjp::ldn_pair("a", "b") == 1.0);
  CHECK(asjp::ldn_pair("", "abc") == 1.0);
  CHECK_THROWS_AS(asjp::ldn_pair("", ""), DomainError);
}

TEST_CASE("ldn_pair = 1 exactly when the edit distance saturates") {
  std::mt19937 rng(23);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::string a = random_form(rng, 10);
    const std::string b = random_form(rng, 10);
    const double d = asjp::ldn_pair(a, b);
    CHECK(d >= 0.0);
    CHECK(d <= 1.0);
    const std::size_t la = asjp::fold_segments(a).size();
    const std::size_t lb = asjp::fold_segments(b).size();
    const bool saturated =
        asjp::levenshtein(a, b) == static_cast<int>(std::max(la, lb));
    CHECK((d == 1.0) == saturated);
  }
}

TEST_CASE("ldn: aligned-concept mean with synonym policies") {
  const auto a = make_list("a", {{1, {"Ei"}}});
  const auto b = make_list("b", {{1, {"wataSi"}}});
  CHECK(asjp::ldn(a, b).ldn == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(asjp::ldn(a, b).concepts_used == 1);

  // two concepts, hand mean: (5/6 + 0)/2
  const auto a2 = make_list("a", {{1, {"Ei"}}, {2, {"tu"}}});
  const auto b2 = make_list("b", {{1, {"wataSi"}}, {2, {"tu"}}});
  CHECK(asjp::ldn(a2, b2).ldn == doctest::Approx(5.0 / 12.0).epsilon(1e-15));

  // identical lists
  CHECK(asjp::ldn(a2, a2).ldn == 0.0);

  // synonym minimum beats first-form-only
  const auto syn = make_list("s", {{1, {"xxx", "Ei"}}});
  const auto ref = make_list("r", {{1, {"Ei"}}});
  CHECK(asjp::ldn(syn, ref, asjp::SynonymPolicy::MinimumOverPairs).ldn == 0.0);
  CHECK(asjp::ldn(syn, ref, asjp::SynonymPolicy::FirstFormOnly).ldn == 1.0);

  // disjoint concepts
  const auto c1 = make_list("c1", {{1, {"ab"}}});
  const auto c2 = make_list("c2", {{2, {"ab"}}});
  CHECK_THROWS_AS(asjp::ldn(c1, c2), DomainError);
}

TEST_CASE("global divergence: hand example and degenerate lists") {
  const auto a = make_list("a", {{1, {"ab"}}, {2, {"cd"}}});
  CHECK(asjp::global_divergence(a, a) == doctest::Approx(1.0).epsilon(1e-15));

  // every form identical: zero divergence, so the ratio must fail
  const auto flat_a = make_list("fa", {{1, {"a"}}, {2, {"a"}}, {3, {"a"}}});
  const auto flat_b = make_list("fb", {{1, {"a"}}, {2, {"a"}}, {3, {"a"}}});
  CHECK(asjp::global_divergence(flat_a, flat_b) == 0.0);
  CHECK_THROWS_AS(asjp::ldnd(flat_a, flat_b), DomainError);

  const auto single = make_list("s", {{1, {"ab"}}});
  CHECK_THROWS_AS(asjp::global_divergence(single, single), DomainError);
}

TEST_CASE("global divergence matches a naive double loop on random lists") {
  std::mt19937 rng(57);
  std::uniform_int_distribution<int> syn_count(1, 3);
  for (int iter = 0; iter < 60; ++iter) {
    std::map<int, std::vector<std::string>> items_a, items_b;
    for (int concept_id = 1; concept_id <= asjp::kConceptCount; ++concept_id) {
      if (rng() % 5 == 0) continue;  // some concepts absent
      std::vector<std::string> fa, fb;
      for (int s = syn_count(rng); s > 0; --s) fa.push_back(random_form(rng, 8));
      for (int s = syn_count(rng); s > 0; --s) fb.push_back(random_form(rng, 8));
      items_a[concept_id] = fa;
      items_b[concept_id] = fb;
    }
    if (items_a.size() < 2) continue;
    const auto a = make_list("a", items_a);
    const auto b = make_list("b", items_b);

    // naive oracle: plain double loop, plain accumulation
    std::vector<int> shared;
    for (const auto& [concept_id, forms] : a.items())
      if (b.items().count(concept_id)) shared.push_back(concept_id);
    double total = 0.0;
    int pairs = 0;
    for (int ci : shared) {
      for (int cj : shared) {
        if (ci == cj) continue;
        double best = 1e300;
        for (const auto& fa : a.items().at(ci))
          for (const auto& fb : b.items().at(cj))
            best = std::min(best, asjp::ldn_pair(fa, fb));
        total += best;
        ++pairs;
      }
    }
    const double oracle = total / pairs;
    CHECK(std::abs(asjp::global_divergence(a, b) - oracle) < 1e-12);
  }
}

TEST_CASE("ldnd: identity, symmetry, and result fields") {
  const auto a = make_list("a", {{1, {"Ei"}}, {2, {"tu"}}, {3, {"wan"}}});
  const auto self = asjp::ldnd(a, a);
  CHECK(self.ldnd == 0.0);
  CHECK(self.concepts_used == 3);
  CHECK(self.language_a.code == "a");
  CHECK(self.language_b.code == "a");

  std::mt19937 rng(91);
  for (int iter = 0; iter < 40; ++iter) {
    std::map<int, std::vector<std::string>> items_a, items_b;
    for (int concept_id = 1; concept_id <= 20; ++concept_id) {
      items_a[concept_id] = {random_form(rng, 8)};
      items_b[concept_id] = {random_form(rng, 8)};
    }
    const auto x = make_list("x", items_a);
    const auto y = make_list("y", items_b);
    const auto xy = asjp::ldnd(x, y);
    const auto yx = asjp::ldnd(y, x);
    CHECK(std::abs(xy.ldnd - yx.ldnd) < 1e-12);
    CHECK(xy.ldnd >= 0.0);
    CHECK(xy.ldn >= 0.0);
    CHECK(xy.ldn <= 1.0);
    CHECK(xy.ldnd == doctest::Approx(xy.ldn / xy.global_divergence).epsilon(1e-15));
  }
}

TEST_CASE("wordlist validation") {
  CHECK_THROWS_AS(make_list("x", {{0, {"ab"}}}), DomainError);
  CHECK_THROWS_AS(make_list("x", {{41, {"ab"}}}), DomainError);
  CHECK_THROWS_AS(make_list("x", {{1, {}}}), DomainError);
  CHECK_THROWS_AS(make_list("x", {{1, {"bad form"}}}), DomainError);
  const auto ok = make_list("x", {{1, {"ab"}}, {40, {"cd", "ef"}}});
  CHECK(ok.concepts_present() == 2);
}
