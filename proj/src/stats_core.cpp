// SPDX-License-Identifier: Apache-2.0
#include "hct/stats_core.hpp"

#include <cmath>

#include "hct/errors.hpp"

namespace hct {
namespace {

void require_size(std::span<const double> x) {
  if (x.size() < 2) throw DomainError("sample needs at least two observations");
}

// Mean and biased variance in one pass (Welford).
struct MeanVar {
  double mean;
  double s2;
};

MeanVar mean_var(std::span<const double> x) {
  require_size(x);
  double mean = 0.0;
  double m2 = 0.0;
  double count = 0.0;
  for (const double v : x) {
    count += 1.0;
    const double delta = v - mean;
    mean += delta / count;
    m2 += delta * (v - mean);
  }
  return {mean, m2 / count};
}

}  // namespace

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw DomainError("Sample: n must be at least 2");
  for (const double v : values_) {
    if (!std::isfinite(v)) throw DomainError("Sample: entries must be finite");
  }
}

MomentSummary summarize(std::span<const double> x) {
  require_size(x);
  // Single-pass central moments up to order four (Terriberry's update).
  double n = 0.0;
  double mean = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  for (const double v : x) {
    const double n1 = n;
    n += 1.0;
    const double delta = v - mean;
    const double delta_n = delta / n;
    const double delta_n2 = delta_n * delta_n;
    const double term1 = delta * delta_n * n1;
    mean += delta_n;
    m4 += term1 * delta_n2 * (n * n - 3.0 * n + 3.0) + 6.0 * delta_n2 * m2 - 4.0 * delta_n * m3;
    m3 += term1 * delta_n * (n - 2.0) - 3.0 * delta_n * m2;
    m2 += term1;
  }

  MomentSummary out;
  out.n = x.size();
  out.mean = mean;
  out.s2 = m2 / n;
  if (out.s2 > 0.0) {
    const double s = std::sqrt(out.s2);
    out.gamma3_hat = m3 / (n * s * s * s);
    out.gamma4_hat = m4 / (n * out.s2 * out.s2);
  }
  return out;
}

double t_statistic(std::span<const double> x) {
  const auto [mean, s2] = mean_var(x);
  if (!(s2 > 0.0)) throw DegenerateSample("t_statistic: zero sample variance");
  return std::sqrt(static_cast<double>(x.size())) * mean / std::sqrt(s2);
}

double z_statistic(std::span<const double> x, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("z_statistic: sigma must be positive");
  const auto [mean, s2] = mean_var(x);
  (void)s2;
  return std::sqrt(static_cast<double>(x.size())) * mean / sigma;
}

double shifted_t_statistic(std::span<const double> x, double c) {
  if (!(c >= 0.0)) throw DomainError("shifted_t_statistic: c must be non-negative");
  const auto [mean, s2] = mean_var(x);
  if (!(s2 > 0.0)) throw DegenerateSample("shifted_t_statistic: zero sample variance");
  const double s = std::sqrt(s2);
  return std::sqrt(static_cast<double>(x.size())) * mean / s + c / s;
}

}  // namespace hct
