// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hct/distributions.hpp"
#include "hct/prng.hpp"

namespace hct {

/// alpha_i = i / p for i = i_min .. floor(alpha0 * p).
struct AlphaGrid {
  std::size_t p = 0;
  double alpha0 = 0.0;
  std::size_t i_min = 1;
  std::size_t i_max = 0;
  std::vector<double> alphas;

  [[nodiscard]] std::size_t size() const { return alphas.size(); }
  [[nodiscard]] double min_alpha() const { return alphas.front(); }
};

/// alpha0 = n log(p) / p.
double default_alpha0(std::size_t n, std::size_t p);

/// Throws EmptyGrid when floor(alpha0 * p) < i_min.
AlphaGrid alpha_grid(std::size_t p, double alpha0, std::size_t i_min = 1);

enum class HcVariant { Bootstrap, Normal, Oracle };
std::string_view to_string(HcVariant v);

struct HcResult {
  double value = 0.0;
  double argmax_alpha = 0.0;
  /// (count_alpha - p alpha) / sqrt(p alpha (1 - alpha)) for every grid alpha.
  std::vector<double> trajectory;
  HcVariant variant = HcVariant::Bootstrap;
};

/// Row-major p x |grid| matrix of exceedance indicators I(T_j > q_j(alpha)).
class IndicatorMatrix {
 public:
  IndicatorMatrix(std::size_t p, std::size_t grid_size) : p_(p), g_(grid_size), bits_(p * grid_size) {}

  [[nodiscard]] std::size_t features() const { return p_; }
  [[nodiscard]] std::size_t grid_size() const { return g_; }
  void set(std::size_t j, std::size_t a, bool v) { bits_[j * g_ + a] = v ? 1 : 0; }
  [[nodiscard]] bool get(std::size_t j, std::size_t a) const { return bits_[j * g_ + a] != 0; }

 private:
  std::size_t p_;
  std::size_t g_;
  std::vector<std::uint8_t> bits_;
};

/// Maximum over the grid of the standardised exceedance counts; the first
/// maximising alpha wins ties.
HcResult hc_from_counts(std::span<const std::size_t> counts, const AlphaGrid& grid,
                        HcVariant variant);
HcResult hc_from_indicators(const IndicatorMatrix& exceed, const AlphaGrid& grid,
                            HcVariant variant = HcVariant::Bootstrap);

struct HcOptions {
  std::size_t threads = 1;
  /// Compute the statistic from the first floor(n/2) rows and calibrate on
  /// the remaining rows, so that T and its bootstrap quantiles are independent.
  bool sample_split = false;
};

/// Per-α upper quantiles used by the oracle statistic: either one row shared
/// by every column or one row per column.
class QuantileTable {
 public:
  static QuantileTable shared(std::vector<double> row);
  static QuantileTable per_column(std::size_t columns, std::vector<double> rows);

  [[nodiscard]] std::size_t grid_size() const { return grid_size_; }
  [[nodiscard]] bool is_shared() const { return columns_ == 0; }
  [[nodiscard]] double at(std::size_t column, std::size_t alpha_index) const;
  /// Throws MissingQuantile unless the table covers p columns and the grid.
  void check_covers(std::size_t p, const AlphaGrid& grid) const;

 private:
  std::size_t columns_ = 0;
  std::size_t grid_size_ = 0;
  std::vector<double> values_;
};

/// Per-feature ingredients shared by the three HC variants.
struct FeatureCalibration {
  double t = 0.0;  // Studentised statistic of the feature
  std::size_t boot_below = 0;
  std::size_t boot_effective = 0;
  std::size_t boot_degenerate = 0;
};

/// Studentised statistic and its bootstrap rank for each column; column j's
/// resamples come from g.child(j).
std::vector<FeatureCalibration> calibrate_features(const FeatureMatrix& m, std::size_t B,
                                                   const Generator& g, const HcOptions& opts = {});

/// Studentised statistic per column (the split half when sample_split is set).
std::vector<double> feature_statistics(const FeatureMatrix& m, const HcOptions& opts = {});

HcResult hc_bootstrap_from(std::span<const FeatureCalibration> features, const AlphaGrid& grid);
HcResult hc_normal_from(std::span<const double> t, const AlphaGrid& grid);
HcResult hc_oracle_from(std::span<const double> t, const AlphaGrid& grid,
                        const QuantileTable& oracle);

/// Bootstrap-t higher criticism: feature j exceeds at alpha when T_j is above
/// its own bootstrap (1 - alpha) quantile from B resamples.
HcResult hc_bootstrap(const FeatureMatrix& m, const AlphaGrid& grid, std::size_t B,
                      const Generator& g, const HcOptions& opts = {});

/// Normal-quantile version: exceedance when T_j > z_alpha.
HcResult hc_normal(const FeatureMatrix& m, const AlphaGrid& grid, const HcOptions& opts = {});

/// Known-law version with a supplied quantile table.
HcResult hc_oracle(const FeatureMatrix& m, const AlphaGrid& grid, const QuantileTable& oracle,
                   const HcOptions& opts = {});

}  // namespace hct
