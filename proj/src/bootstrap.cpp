// SPDX-License-Identifier: Apache-2.0
#include "hct/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hct/errors.hpp"

namespace hct {
namespace {

// Relative slack so that alpha = i/p times an exact multiple of p does not
// land one below the intended integer.
constexpr double kRankSlack = 1e-12;

// Calls fn(t) for every non-degenerate resample, returns the degenerate count.
template <class Fn>
std::size_t for_each_resample(std::span<const double> x, std::size_t B, Generator& g, Fn&& fn) {
  const std::size_t n = x.size();
  if (n < 2) throw DomainError("bootstrap: sample needs at least two observations");
  if (B < 1) throw DomainError("bootstrap: B must be >= 1");
  if (n > std::numeric_limits<std::uint32_t>::max()) throw DomainError("bootstrap: sample too large");

  double mean = 0.0;
  for (const double v : x) mean += v;
  mean /= static_cast<double>(n);
  // Resample the centred data; T0* then only needs the resample's own moments.
  std::vector<double> centred(n);
  bool constant = true;
  for (std::size_t i = 0; i < n; ++i) {
    centred[i] = x[i] - mean;
    constant = constant && x[i] == x[0];
  }
  if (constant) throw DegenerateSample("bootstrap: original sample is constant");

  const auto bound = static_cast<std::uint32_t>(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  const double root_n = std::sqrt(static_cast<double>(n));
  std::size_t degenerate = 0;
  for (std::size_t b = 0; b < B; ++b) {
    const std::uint32_t first = g.below(bound);
    const double first_value = x[first];
    double sum = centred[first];
    double sum_sq = sum * sum;
    bool differs = false;
    for (std::size_t i = 1; i < n; ++i) {
      const std::uint32_t idx = g.below(bound);
      const double v = centred[idx];
      sum += v;
      sum_sq += v * v;
      differs |= x[idx] != first_value;
    }
    if (!differs) {
      ++degenerate;
      continue;
    }
    const double m = sum * inv_n;
    const double var = std::max(sum_sq * inv_n - m * m, std::numeric_limits<double>::min());
    fn(root_n * m / std::sqrt(var));
  }
  return degenerate;
}

}  // namespace

std::size_t min_resamples(double alpha_min) {
  if (!(alpha_min > 0.0 && alpha_min <= 0.5)) {
    throw DomainError("min_resamples: alpha_min must lie in (0, 1/2]");
  }
  return static_cast<std::size_t>(std::ceil(100.0 / alpha_min * (1.0 - kRankSlack)));
}

std::size_t quantile_rank(std::size_t effective, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("bootstrap quantile: alpha must lie in (0,1)");
  const auto needed = static_cast<std::size_t>(std::ceil(1.0 / alpha * (1.0 - kRankSlack)));
  if (effective < needed) {
    throw InsufficientResamples("bootstrap quantile: " + std::to_string(effective) +
                                " draws, need at least " + std::to_string(needed));
  }
  const double b = static_cast<double>(effective);
  const auto above = static_cast<std::size_t>(std::floor(alpha * b * (1.0 + kRankSlack)));
  return effective - std::min(above, effective - 1);
}

BootstrapDraws bootstrap_t_draws(std::span<const double> x, std::size_t B, Generator& g) {
  BootstrapDraws out;
  out.b_requested = B;
  out.sorted_t.reserve(B);
  out.n_degenerate = for_each_resample(x, B, g, [&](double t) { out.sorted_t.push_back(t); });
  std::sort(out.sorted_t.begin(), out.sorted_t.end());
  return out;
}

double bootstrap_quantile(const BootstrapDraws& d, double alpha) {
  const std::size_t rank = quantile_rank(d.effective(), alpha);
  return d.sorted_t[rank - 1];
}

BootstrapRank bootstrap_rank(std::span<const double> x, std::size_t B, double statistic,
                             Generator& g) {
  BootstrapRank out;
  out.n_degenerate = for_each_resample(x, B, g, [&](double t) {
    out.below += t < statistic ? 1 : 0;
    ++out.effective;
  });
  return out;
}

}  // namespace hct
