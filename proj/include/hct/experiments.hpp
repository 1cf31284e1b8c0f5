// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "hct/config.hpp"
#include "hct/distributions.hpp"
#include "hct/hc.hpp"
#include "hct/prng.hpp"

namespace hct {

/// Monte Carlo estimate with its standard error over m replicates.
struct McEstimate {
  double estimate = 0.0;
  double se = 0.0;
  std::size_t m = 0;
};

/// hits / m with the binomial standard error sqrt(p (1 - p) / m).
McEstimate binomial_estimate(std::size_t hits, std::size_t m);

enum class StatKind {
  T0,                  // P(T0 > x)
  Z0,                  // P(Z0 > x), sigma = 1
  Tc,                  // P(T_c > x)
  T0VsBootQuantile,    // P(T0 > t-hat_alpha)
  T0VsNormalQuantile,  // P(T0 > z_alpha)
};

struct StatSelector {
  StatKind kind = StatKind::T0;
  double c = 0.0;
  double alpha = 0.05;
  std::size_t B = 0;
  /// For T0VsBootQuantile: draw the statistic from a sample independent of
  /// the one that is resampled (otherwise both come from one sample).
  bool independent = true;
};

/// Monte Carlo estimate of an exceedance probability for samples of size n
/// from `dist` (which must be standardised). Replicate i uses g.child(i), so
/// the result does not depend on `threads`.
McEstimate estimate_exceedance(const StatSelector& stat, const DistSpec& dist, std::size_t n,
                               double x, std::size_t m, const Generator& g,
                               std::size_t threads = 1);

/// Fraction of a sorted sample that is <= x.
double ecdf_at(std::span<const double> sorted, double x);

/// Upper (1 - alpha) quantile of a sorted sample with the bootstrap
/// order-statistic convention.
double upper_quantile(std::span<const double> sorted, double alpha);

/// Two-sample Kolmogorov-Smirnov distance sup |F_a - F_b|.
double ks_distance(std::span<const double> a, std::span<const double> b);

/// m draws of T0 for samples of size n, sorted ascending.
std::vector<double> simulate_t0(const DistSpec& dist, std::size_t n, std::size_t m,
                                const Generator& g, std::size_t threads = 1);

/// Upper quantiles of T0 at each alpha from `draws` simulated statistics.
std::vector<double> oracle_quantiles(const DistSpec& dist, std::size_t n,
                                     std::span<const double> alphas, std::size_t draws,
                                     const Generator& g, std::size_t threads = 1);

struct CalibrationRow {
  double alpha = 0.0;
  McEstimate boot;    // P(T0 > t-hat_alpha)
  McEstimate normal;  // P(T0 > z_alpha)
};

struct CalibrationResult {
  std::vector<CalibrationRow> rows;
  std::size_t B = 0;
  std::size_t degenerate = 0;
  std::size_t unreliable = 0;  // replicates with more than 1% degenerate resamples
};

/// Level of the one-sided bootstrap-t and normal tests, estimated over m
/// outer replicates with B resamples each.
CalibrationResult calibration_study(const DistSpec& dist, std::size_t n,
                                    std::span<const double> alphas, std::size_t B, std::size_t m,
                                    bool independent, const Generator& g, std::size_t threads = 1);

/// Everything fixed across the replicates of one HC histogram study.
struct HcStudySetup {
  std::size_t n = 0;
  std::size_t p = 0;
  double theta = 0.5;
  DistSpec dist;
  AlphaGrid grid;
  std::size_t B = 0;
  QuantileTable oracle;
  bool sample_split = false;
};

/// Derives p, the alpha grid, B and the shared oracle quantile table from a
/// hc-hist configuration.
HcStudySetup make_hc_setup(const ExperimentConfig& cfg, const Generator& g, std::size_t threads = 1);

struct HcReplicate {
  HcResult oracle;
  HcResult bootstrap;
  HcResult normal;
  std::size_t boot_degenerate = 0;
  bool reliable = true;
};

/// `replicates` fresh matrices under h (signal from `signal` under H1); all
/// three HC variants on each. Replicate i uses g.child(i).
std::vector<HcReplicate> hc_study(const HcStudySetup& setup, Hypothesis h,
                                  const SignalConfig& signal, std::size_t replicates,
                                  const Generator& g, std::size_t threads = 1);

/// Joint cdf of max_j T0^(j) under the MA model against the product of the
/// marginals, over an x grid.
struct DepCdfCurves {
  std::size_t p = 0;
  double theta = 0.0;
  std::vector<double> x;
  std::vector<double> joint;
  std::vector<double> joint_se;
  std::vector<double> product;
  std::vector<double> product_se;
  double sup_gap = 0.0;
  double sup_gap_se = 0.0;  // combined SE at the maximising x
  double sup_gap_x = 0.0;
};

/// `replicates` MA matrices give the joint curve; `marginal_columns`
/// independently generated MA columns give the marginal cdf F, and the
/// product curve is F^p.
DepCdfCurves dep_cdf_study(const MaStreamSpec& ma, std::size_t n, std::size_t p,
                           std::size_t replicates, std::size_t marginal_columns,
                           std::span<const double> x_grid, const Generator& g,
                           std::size_t threads = 1);

struct RunContext {
  std::size_t threads = 1;
  std::ostream* log = nullptr;  // progress and the calibrate table
};

struct RunOutput {
  std::vector<std::filesystem::path> files;
  std::size_t validity_flags = 0;
};

/// Comment lines written at the top of every output CSV.
std::vector<std::string> output_header(const ExperimentConfig& cfg);

RunOutput run_tail_compare(const ExperimentConfig& cfg, const RunContext& ctx);
RunOutput run_boot_quantiles(const ExperimentConfig& cfg, const RunContext& ctx);
RunOutput run_hc_hist(const ExperimentConfig& cfg, const RunContext& ctx);
RunOutput run_dep_cdf(const ExperimentConfig& cfg, const RunContext& ctx);
RunOutput run_phase_plot(const ExperimentConfig& cfg, const RunContext& ctx);
RunOutput run_calibrate(const ExperimentConfig& cfg, const RunContext& ctx);

/// Validates cfg and dispatches on cfg.experiment. Throws ValidityError when
/// cfg.strict_validity is set and the run raised validity flags.
RunOutput run_experiment(const ExperimentConfig& cfg, const RunContext& ctx);

}  // namespace hct
