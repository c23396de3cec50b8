#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace langdist {

// Kahan-Babuska (Neumaier) compensated accumulator. Summation happens in
// the order values are added; a fixed input order therefore gives
// bit-reproducible sums across runs and platforms.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
    ++count_;
  }

  double value() const { return sum_ + comp_; }
  std::size_t count() const { return count_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  std::size_t count_ = 0;
};

inline double compensated_sum(std::span<const double> values) {
  CompensatedSum acc;
  for (double v : values) acc.add(v);
  return acc.value();
}

inline double compensated_mean(std::span<const double> values) {
  return compensated_sum(values) / static_cast<double>(values.size());
}

}  // namespace langdist
