#include "langdist/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "langdist/compensated.hpp"
#include "langdist/distributions.hpp"
#include "langdist/errors.hpp"

namespace langdist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sum_of(std::span<const double> v) { return compensated_sum(v); }

double mean_of(std::span<const double> v) {
  return sum_of(v) / static_cast<double>(v.size());
}

// Sum of squared deviations from the given center, compensated.
double ss_about(std::span<const double> v, double center) {
  CompensatedSum acc;
  for (double x : v) {
    const double d = x - center;
    acc.add(d * d);
  }
  return acc.value();
}

// F ratio for a two-group one-way layout, shared by anova_f and levene.
// `zero_ss_is_error` selects the policy when SSB = SSW = 0: anova treats F
// as undefined, levene reports no spread difference (W = 0, p = 1).
void two_group_f(std::span<const double> a, std::span<const double> b,
                 bool zero_ss_is_error, double* f_out, double* p_out,
                 double* mean_a_out, double* mean_b_out) {
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double mean_a = mean_of(a);
  const double mean_b = mean_of(b);
  const double grand = (sum_of(a) + sum_of(b)) / (na + nb);
  const double ssb = na * (mean_a - grand) * (mean_a - grand) +
                     nb * (mean_b - grand) * (mean_b - grand);
  const double ssw = ss_about(a, mean_a) + ss_about(b, mean_b);
  const double df2 = na + nb - 2.0;

  double f, p;
  if (ssw == 0.0) {
    if (ssb == 0.0) {
      if (zero_ss_is_error)
        throw DomainError("F undefined: no variation within or between groups");
      f = 0.0;
      p = 1.0;
    } else {
      f = kInf;
      p = 0.0;
    }
  } else {
    f = ssb / (ssw / df2);
    p = dist::f_sf(f, 1.0, df2);
  }
  *f_out = f;
  *p_out = p;
  if (mean_a_out) *mean_a_out = mean_a;
  if (mean_b_out) *mean_b_out = mean_b;
}

}  // namespace

Descriptives descriptives(std::span<const double> values) {
  if (values.empty()) throw DomainError("descriptives of an empty sample");
  Descriptives d;
  d.n = static_cast<int>(values.size());
  d.mean = mean_of(values);
  if (d.n >= 2)
    d.sd = std::sqrt(ss_about(values, d.mean) / (d.n - 1));
  return d;
}

PearsonResult pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw DomainError("pearson: input length mismatch");
  const int n = static_cast<int>(x.size());
  if (n < 3) throw DomainError("pearson: need at least 3 observations");

  const double mx = mean_of(x);
  const double my = mean_of(y);
  CompensatedSum sxy, sxx, syy;
  for (int i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy.add(dx * dy);
    sxx.add(dx * dx);
    syy.add(dy * dy);
  }
  if (sxx.value() <= 0.0 || syy.value() <= 0.0)
    throw DomainError("pearson: correlation undefined for a constant input");

  PearsonResult res;
  res.n = n;
  res.r = std::clamp(sxy.value() / std::sqrt(sxx.value() * syy.value()), -1.0, 1.0);
  const double df = n - 2;
  const double one_minus_r2 = (1.0 - res.r) * (1.0 + res.r);
  if (one_minus_r2 <= 0.0) {
    res.t_stat = res.r > 0 ? kInf : -kInf;
    res.p_two_tailed = 0.0;
  } else {
    res.t_stat = res.r * std::sqrt(df / one_minus_r2);
    res.p_two_tailed = dist::student_t_two_tailed_p(res.t_stat, df);
  }
  return res;
}

GroupAssignment split_groups(Method method,
                             const std::vector<std::pair<std::string, double>>& distances,
                             double cutline) {
  if (distances.empty()) throw DomainError("split_groups: empty input");
  GroupAssignment g;
  g.method = method;
  g.cutline = cutline;
  g.groups.reserve(distances.size());
  for (const auto& [country, value] : distances) {
    const Group grp = value <= cutline ? Group::A : Group::B;
    g.groups.emplace_back(country, grp);
    (grp == Group::A ? g.n_a : g.n_b)++;
  }
  std::sort(g.groups.begin(), g.groups.end());
  for (std::size_t i = 1; i < g.groups.size(); ++i)
    if (g.groups[i].first == g.groups[i - 1].first)
      throw DomainError("split_groups: duplicate country '" + g.groups[i].first + "'");
  return g;
}

AnovaResult anova_f(std::span<const double> group_a, std::span<const double> group_b) {
  if (group_a.size() < 2 || group_b.size() < 2)
    throw DomainError("anova_f: each group needs at least 2 observations");
  AnovaResult res;
  res.n_a = static_cast<int>(group_a.size());
  res.n_b = static_cast<int>(group_b.size());
  two_group_f(group_a, group_b, /*zero_ss_is_error=*/true, &res.f, &res.p,
              &res.mean_a, &res.mean_b);
  return res;
}

LeveneResult levene(std::span<const double> group_a, std::span<const double> group_b) {
  if (group_a.size() < 2 || group_b.size() < 2)
    throw DomainError("levene: each group needs at least 2 observations");
  const double mean_a = mean_of(group_a);
  const double mean_b = mean_of(group_b);
  std::vector<double> za, zb;
  za.reserve(group_a.size());
  zb.reserve(group_b.size());
  for (double v : group_a) za.push_back(std::abs(v - mean_a));
  for (double v : group_b) zb.push_back(std::abs(v - mean_b));
  LeveneResult res;
  two_group_f(za, zb, /*zero_ss_is_error=*/false, &res.w, &res.p, nullptr, nullptr);
  return res;
}

namespace {

// Gaussian elimination for the 4x4 Wilks computation.
using Mat4 = std::array<std::array<double, 4>, 4>;
using Vec4 = std::array<double, 4>;

// Solves m x = rhs; returns false when the pivot degenerates.
bool solve4(Mat4 m, Vec4 rhs, Vec4* x) {
  double scale = 0.0;
  for (const auto& row : m)
    for (double v : row) scale = std::max(scale, std::abs(v));
  const double tol = scale * 1e-12;

  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (std::abs(m[pivot][col]) <= tol) return false;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      std::swap(rhs[pivot], rhs[col]);
    }
    for (int r = col + 1; r < 4; ++r) {
      const double factor = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= factor * m[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  for (int row = 3; row >= 0; --row) {
    double v = rhs[row];
    for (int c = row + 1; c < 4; ++c) v -= m[row][c] * (*x)[c];
    (*x)[row] = v / m[row][row];
  }
  return true;
}

constexpr Skill kSectionSkills[4] = {Skill::Reading, Skill::Listening,
                                     Skill::Speaking, Skill::Writing};

std::optional<WilksResult> wilks_lambda(const std::vector<const ScoreRow*>& rows_a,
                                        const std::vector<const ScoreRow*>& rows_b) {
  const int na = static_cast<int>(rows_a.size());
  const int nb = static_cast<int>(rows_b.size());
  const int n = na + nb;
  constexpr int p = 4;
  if (n - p - 1 < 1) return std::nullopt;

  Vec4 mean_a{}, mean_b{};
  for (int k = 0; k < p; ++k) {
    CompensatedSum sa, sb;
    for (const ScoreRow* r : rows_a) sa.add(r->score(kSectionSkills[k]));
    for (const ScoreRow* r : rows_b) sb.add(r->score(kSectionSkills[k]));
    mean_a[k] = sa.value() / na;
    mean_b[k] = sb.value() / nb;
  }

  // Pooled within-group covariance.
  Mat4 pooled{};
  auto accumulate = [&](const std::vector<const ScoreRow*>& rows, const Vec4& mean) {
    for (const ScoreRow* r : rows) {
      Vec4 d;
      for (int k = 0; k < p; ++k) d[k] = r->score(kSectionSkills[k]) - mean[k];
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) pooled[i][j] += d[i] * d[j];
    }
  };
  accumulate(rows_a, mean_a);
  accumulate(rows_b, mean_b);
  for (auto& row : pooled)
    for (double& v : row) v /= (n - 2);

  Vec4 diff;
  for (int k = 0; k < p; ++k) diff[k] = mean_a[k] - mean_b[k];
  Vec4 solved;
  if (!solve4(pooled, diff, &solved)) return std::nullopt;
  double quad = 0.0;
  for (int k = 0; k < p; ++k) quad += diff[k] * solved[k];
  if (quad < 0.0) return std::nullopt;  // numerically indefinite pooled matrix

  const double t2 = (static_cast<double>(na) * nb / n) * quad;
  WilksResult w;
  w.lambda = 1.0 / (1.0 + t2 / (n - 2));
  w.df1 = p;
  w.df2 = n - p - 1;
  w.f_approx = (static_cast<double>(w.df2) / (p * static_cast<double>(n - 2))) * t2;
  w.p = dist::f_sf(w.f_approx, w.df1, w.df2);
  return w;
}

}  // namespace

ManovaResult manova(const GroupAssignment& groups, const ScoreTable& scores) {
  std::vector<const ScoreRow*> rows_a, rows_b;
  for (const auto& [country, group] : groups.groups) {
    const ScoreRow* row = scores.find(country);
    if (row == nullptr)
      throw DomainError("manova: no score row for grouped country '" + country +
                        "' in year " + std::to_string(scores.year()));
    (group == Group::A ? rows_a : rows_b).push_back(row);
  }
  if (rows_a.size() < 2 || rows_b.size() < 2)
    throw DomainError("manova: degenerate grouping (need 2+ countries per group)");

  ManovaResult res;
  res.n_a = static_cast<int>(rows_a.size());
  res.n_b = static_cast<int>(rows_b.size());
  for (std::size_t i = 0; i < std::size(kAllSkills); ++i) {
    const Skill skill = kAllSkills[i];
    std::vector<double> a, b;
    a.reserve(rows_a.size());
    b.reserve(rows_b.size());
    for (const ScoreRow* r : rows_a) a.push_back(r->score(skill));
    for (const ScoreRow* r : rows_b) b.push_back(r->score(skill));
    const AnovaResult f = anova_f(a, b);
    res.variables[i] = {skill, f.mean_a, f.mean_b, f.f, f.p};
  }
  res.overall = wilks_lambda(rows_a, rows_b);
  return res;
}

std::vector<std::pair<double, double>> qq_data(std::span<const double> values) {
  const int n = static_cast<int>(values.size());
  if (n < 3) throw DomainError("qq_data: need at least 3 observations");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() == sorted.back())
    throw DomainError("qq_data: constant sample");
  std::vector<std::pair<double, double>> points;
  points.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double pos = (i + 0.5) / n;
    points.emplace_back(dist::inverse_normal_cdf(pos), sorted[i]);
  }
  return points;
}

}  // namespace langdist
