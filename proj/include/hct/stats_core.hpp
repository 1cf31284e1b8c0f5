// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hct {

/// An observation vector with at least two finite entries.
class Sample {
 public:
  explicit Sample(std::vector<double> values);

  [[nodiscard]] std::span<const double> values() const { return values_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

/// Mean, biased variance (divisor n) and the standardised third and fourth
/// moments. The standardised moments are empty when s2 == 0.
struct MomentSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double s2 = 0.0;
  std::optional<double> gamma3_hat;
  std::optional<double> gamma4_hat;
};

MomentSummary summarize(std::span<const double> x);

/// sqrt(n) * mean / S. Throws DegenerateSample when S == 0.
double t_statistic(std::span<const double> x);

/// sqrt(n) * mean / sigma for known population sd.
double z_statistic(std::span<const double> x, double sigma);

/// (sqrt(n) * mean + c) / S, i.e. t_statistic(x) + c / S.
double shifted_t_statistic(std::span<const double> x, double c);

inline double t_statistic(const Sample& x) { return t_statistic(x.values()); }
inline double z_statistic(const Sample& x, double sigma) {
  return z_statistic(x.values(), sigma);
}
inline double shifted_t_statistic(const Sample& x, double c) {
  return shifted_t_statistic(x.values(), c);
}
inline MomentSummary summarize(const Sample& x) { return summarize(x.values()); }

}  // namespace hct
