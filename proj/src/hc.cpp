// SPDX-License-Identifier: Apache-2.0
#include "hct/hc.hpp"

#include <cmath>
#include <string>

#include "hct/bootstrap.hpp"
#include "hct/errors.hpp"
#include "hct/normal.hpp"
#include "hct/parallel.hpp"
#include "hct/stats_core.hpp"

namespace hct {
namespace {

struct SplitView {
  std::span<const double> statistic;
  std::span<const double> calibration;
};

SplitView split_column(std::span<const double> column, bool sample_split) {
  if (!sample_split) return {column, column};
  const std::size_t half = column.size() / 2;
  if (half < 2 || column.size() - half < 2) {
    throw DomainError("sample split needs at least four rows");
  }
  return {column.first(half), column.subspan(half)};
}

}  // namespace

double default_alpha0(std::size_t n, std::size_t p) {
  if (p < 2) throw DomainError("default_alpha0: p must be at least 2");
  const double pd = static_cast<double>(p);
  return static_cast<double>(n) * std::log(pd) / pd;
}

AlphaGrid alpha_grid(std::size_t p, double alpha0, std::size_t i_min) {
  if (p < 1) throw DomainError("alpha_grid: p must be positive");
  if (!(alpha0 > 0.0 && alpha0 < 1.0)) throw DomainError("alpha_grid: alpha0 must lie in (0,1)");
  if (i_min < 1) throw DomainError("alpha_grid: i_min must be >= 1");
  const double pd = static_cast<double>(p);
  const auto i_max = static_cast<std::size_t>(std::floor(alpha0 * pd * (1.0 + 1e-12)));
  if (i_max < i_min) {
    throw EmptyGrid("alpha_grid: floor(alpha0 * p) = " + std::to_string(i_max) + " < i_min = " +
                    std::to_string(i_min));
  }
  AlphaGrid grid{p, alpha0, i_min, i_max, {}};
  grid.alphas.reserve(i_max - i_min + 1);
  for (std::size_t i = i_min; i <= i_max; ++i) grid.alphas.push_back(static_cast<double>(i) / pd);
  return grid;
}

std::string_view to_string(HcVariant v) {
  switch (v) {
    case HcVariant::Bootstrap: return "hc_n";
    case HcVariant::Normal: return "hc_norm";
    case HcVariant::Oracle: return "hc";
  }
  return "?";
}

HcResult hc_from_counts(std::span<const std::size_t> counts, const AlphaGrid& grid,
                        HcVariant variant) {
  if (counts.size() != grid.size()) throw DomainError("hc: counts do not match the grid");
  HcResult out;
  out.variant = variant;
  out.trajectory.resize(grid.size());
  const double pd = static_cast<double>(grid.p);
  for (std::size_t a = 0; a < grid.size(); ++a) {
    const double alpha = grid.alphas[a];
    const double term =
        (static_cast<double>(counts[a]) - pd * alpha) / std::sqrt(pd * alpha * (1.0 - alpha));
    out.trajectory[a] = term;
    if (a == 0 || term > out.value) {
      out.value = term;
      out.argmax_alpha = alpha;
    }
  }
  return out;
}

HcResult hc_from_indicators(const IndicatorMatrix& exceed, const AlphaGrid& grid,
                            HcVariant variant) {
  if (exceed.grid_size() != grid.size() || exceed.features() != grid.p) {
    throw DomainError("hc: indicator matrix does not match the grid");
  }
  std::vector<std::size_t> counts(grid.size(), 0);
  for (std::size_t j = 0; j < exceed.features(); ++j) {
    for (std::size_t a = 0; a < grid.size(); ++a) counts[a] += exceed.get(j, a) ? 1 : 0;
  }
  return hc_from_counts(counts, grid, variant);
}

QuantileTable QuantileTable::shared(std::vector<double> row) {
  QuantileTable t;
  t.grid_size_ = row.size();
  t.values_ = std::move(row);
  return t;
}

QuantileTable QuantileTable::per_column(std::size_t columns, std::vector<double> rows) {
  if (columns == 0 || rows.size() % columns != 0) {
    throw DomainError("QuantileTable: rows must hold columns x grid values");
  }
  QuantileTable t;
  t.columns_ = columns;
  t.grid_size_ = rows.size() / columns;
  t.values_ = std::move(rows);
  return t;
}

double QuantileTable::at(std::size_t column, std::size_t alpha_index) const {
  const std::size_t row = is_shared() ? 0 : column;
  return values_[row * grid_size_ + alpha_index];
}

void QuantileTable::check_covers(std::size_t p, const AlphaGrid& grid) const {
  if (grid_size_ != grid.size()) {
    throw MissingQuantile("oracle table has " + std::to_string(grid_size_) +
                          " quantiles per column, grid has " + std::to_string(grid.size()));
  }
  if (!is_shared() && columns_ != p) {
    throw MissingQuantile("oracle table covers " + std::to_string(columns_) + " of " +
                          std::to_string(p) + " columns");
  }
}

std::vector<double> feature_statistics(const FeatureMatrix& m, const HcOptions& opts) {
  std::vector<double> t(m.cols());
  parallel_for(m.cols(), opts.threads, [&](std::size_t j) {
    t[j] = t_statistic(split_column(m.column(j), opts.sample_split).statistic);
  });
  return t;
}

std::vector<FeatureCalibration> calibrate_features(const FeatureMatrix& m, std::size_t B,
                                                   const Generator& g, const HcOptions& opts) {
  std::vector<FeatureCalibration> out(m.cols());
  parallel_for(m.cols(), opts.threads, [&](std::size_t j) {
    const SplitView view = split_column(m.column(j), opts.sample_split);
    FeatureCalibration& f = out[j];
    f.t = t_statistic(view.statistic);
    Generator stream = g.child(j);
    const BootstrapRank rank = bootstrap_rank(view.calibration, B, f.t, stream);
    f.boot_below = rank.below;
    f.boot_effective = rank.effective;
    f.boot_degenerate = rank.n_degenerate;
  });
  return out;
}

HcResult hc_bootstrap_from(std::span<const FeatureCalibration> features, const AlphaGrid& grid) {
  if (features.size() != grid.p) throw DomainError("hc_bootstrap: feature count differs from grid p");
  std::vector<std::size_t> counts(grid.size(), 0);
  for (const FeatureCalibration& f : features) {
    for (std::size_t a = 0; a < grid.size(); ++a) {
      counts[a] += f.boot_below >= quantile_rank(f.boot_effective, grid.alphas[a]) ? 1 : 0;
    }
  }
  return hc_from_counts(counts, grid, HcVariant::Bootstrap);
}

HcResult hc_normal_from(std::span<const double> t, const AlphaGrid& grid) {
  if (t.size() != grid.p) throw DomainError("hc_normal: feature count differs from grid p");
  std::vector<double> z(grid.size());
  for (std::size_t a = 0; a < grid.size(); ++a) z[a] = std_normal_quantile(grid.alphas[a]);
  std::vector<std::size_t> counts(grid.size(), 0);
  for (const double tj : t) {
    for (std::size_t a = 0; a < grid.size(); ++a) counts[a] += tj > z[a] ? 1 : 0;
  }
  return hc_from_counts(counts, grid, HcVariant::Normal);
}

HcResult hc_oracle_from(std::span<const double> t, const AlphaGrid& grid,
                        const QuantileTable& oracle) {
  if (t.size() != grid.p) throw DomainError("hc_oracle: feature count differs from grid p");
  oracle.check_covers(t.size(), grid);
  std::vector<std::size_t> counts(grid.size(), 0);
  for (std::size_t j = 0; j < t.size(); ++j) {
    for (std::size_t a = 0; a < grid.size(); ++a) counts[a] += t[j] > oracle.at(j, a) ? 1 : 0;
  }
  return hc_from_counts(counts, grid, HcVariant::Oracle);
}

HcResult hc_bootstrap(const FeatureMatrix& m, const AlphaGrid& grid, std::size_t B,
                      const Generator& g, const HcOptions& opts) {
  if (B < min_resamples(grid.min_alpha())) {
    throw InsufficientResamples("hc_bootstrap: B = " + std::to_string(B) + " is below 100/alpha_min = " +
                                std::to_string(min_resamples(grid.min_alpha())));
  }
  const auto features = calibrate_features(m, B, g, opts);
  return hc_bootstrap_from(features, grid);
}

HcResult hc_normal(const FeatureMatrix& m, const AlphaGrid& grid, const HcOptions& opts) {
  return hc_normal_from(feature_statistics(m, opts), grid);
}

HcResult hc_oracle(const FeatureMatrix& m, const AlphaGrid& grid, const QuantileTable& oracle,
                   const HcOptions& opts) {
  oracle.check_covers(m.cols(), grid);
  return hc_oracle_from(feature_statistics(m, opts), grid, oracle);
}

}  // namespace hct
