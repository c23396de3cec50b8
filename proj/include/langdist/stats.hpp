#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "langdist/language.hpp"
#include "langdist/scores.hpp"

namespace langdist {

struct Descriptives {
  int n = 0;
  double mean = 0.0;
  std::optional<double> sd;  // sample (n-1) standard deviation; absent for n = 1
};

// Throws DomainError on empty input.
Descriptives descriptives(std::span<const double> values);

struct PearsonResult {
  double r = 0.0;
  int n = 0;
  double t_stat = 0.0;       // +/-inf when |r| = 1
  double p_two_tailed = 0.0;
};

// Product-moment correlation with a two-tailed Student-t significance test
// on n-2 degrees of freedom. Requires equal lengths, n >= 3, and two
// non-constant inputs.
PearsonResult pearson(std::span<const double> x, std::span<const double> y);

enum class Group { A, B };

struct GroupAssignment {
  Method method = Method::Embedding;
  double cutline = 0.0;
  // Sorted by country; value <= cutline lands in A, above in B.
  std::vector<std::pair<std::string, Group>> groups;
  int n_a = 0;
  int n_b = 0;
};

GroupAssignment split_groups(Method method,
                             const std::vector<std::pair<std::string, double>>& distances,
                             double cutline);

struct AnovaResult {
  double f = 0.0;  // +inf when within-variance is zero but means differ
  double p = 0.0;
  double mean_a = 0.0;
  double mean_b = 0.0;
  int n_a = 0;
  int n_b = 0;
};

// One-way ANOVA for the two-group design, df = (1, n_a + n_b - 2).
// Requires at least two observations per group; throws when both the
// between- and within-group variation vanish (F undefined).
AnovaResult anova_f(std::span<const double> group_a, std::span<const double> group_b);

struct LeveneResult {
  double w = 0.0;  // +inf when deviations differ but have no within-spread
  double p = 0.0;
};

// Homogeneity-of-variance test on absolute deviations from the group means
// (mean-centered variant), p from F(1, n_a + n_b - 2).
LeveneResult levene(std::span<const double> group_a, std::span<const double> group_b);

struct ManovaVariable {
  Skill skill = Skill::Total;
  double mean_a = 0.0;
  double mean_b = 0.0;
  double f = 0.0;
  double p = 0.0;
};

struct WilksResult {
  double lambda = 0.0;
  double f_approx = 0.0;
  double p = 0.0;
  int df1 = 0;
  int df2 = 0;
};

struct ManovaResult {
  std::array<ManovaVariable, 5> variables{};  // Reading..Total order
  // Wilks' lambda over the four section variables via the two-group
  // Hotelling identity; absent when the pooled covariance is singular or
  // the sample is too small.
  std::optional<WilksResult> overall;
  int n_a = 0;
  int n_b = 0;
};

// Per-variable two-group ANOVA over all five score columns. Every grouped
// country must have a score row.
ManovaResult manova(const GroupAssignment& groups, const ScoreTable& scores);

// Normal Q-Q data: (theoretical quantile at (i - 0.5)/n, i-th order
// statistic). Requires n >= 3 and a non-constant sample.
std::vector<std::pair<double, double>> qq_data(std::span<const double> values);

}  // namespace langdist
