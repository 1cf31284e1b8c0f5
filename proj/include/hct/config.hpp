// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hct/distributions.hpp"
#include "hct/tail_approx.hpp"

namespace hct {

inline constexpr int kConfigSchema = 1;
inline constexpr std::string_view kLibraryVersion = "0.1.0";

enum class Experiment { TailCompare, BootQuantiles, HcHist, DepCdf, PhasePlot, Calibrate };

std::string_view to_string(Experiment e);
Experiment experiment_from_string(std::string_view name);

struct GridSpec {
  /// Unset means alpha0 = n log(p) / p.
  std::optional<double> alpha0;
  std::size_t i_min = 1;
};

struct DepSetting {
  std::size_t p = 100;
  double theta = 0.5;
};

/// Every knob of one experiment run. Execution settings (thread count) are
/// deliberately not part of it, so outputs do not depend on them.
struct ExperimentConfig {
  int schema = kConfigSchema;
  Experiment experiment = Experiment::TailCompare;
  std::uint64_t seed = 20100101;
  /// Sample sizes n.
  std::vector<std::size_t> sizes;
  double theta = 0.5;
  /// Feature count; 0 derives p = round(n^{1/theta}).
  std::size_t p = 0;
  /// Bootstrap resamples; 0 derives min_resamples(smallest alpha).
  std::size_t B = 0;
  std::size_t replicates = 200;
  std::vector<DistSpec> dists;
  std::optional<MaStreamSpec> ma;
  std::vector<DepSetting> dep_settings;
  /// Independent MA columns used to estimate the marginal cdf in dep-cdf.
  std::size_t marginal_columns = 1'000'000;
  std::vector<double> betas;
  /// Alternatives use r = min(1, r_factor * rho_theta(beta)).
  double r_factor = 1.0;
  GridSpec grid;
  std::vector<double> x_grid;
  std::vector<double> alphas;
  std::vector<double> thetas;
  std::vector<double> r_values;
  std::size_t oracle_draws = 10'000'000;
  TailForm tail_form = TailForm::Exponential;
  /// calibrate: statistic from a sample independent of the bootstrap sample.
  /// hc-hist: split each feature's sample between statistic and bootstrap.
  bool independent = false;
  /// Turn numerical-validity flags into a failing exit status.
  bool strict_validity = false;
  std::string output_dir = "out";
};

/// Desk-scale defaults for an experiment; paper_scale switches to the sizes
/// of the original simulation designs.
ExperimentConfig default_config(Experiment e, bool paper_scale = false);

/// Evenly spaced values from..to inclusive.
std::vector<double> linear_grid(double from, double to, double step);

nlohmann::json dist_to_json(const DistSpec& d);
DistSpec dist_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExperimentConfig& cfg);

/// Overlays the keys present in `j` onto `base`. Unknown keys, a schema other
/// than kConfigSchema, or malformed values raise ConfigError.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base);

/// Reads a JSON file and overlays it on the defaults of its "experiment".
ExperimentConfig load_config(const std::string& path, std::optional<Experiment> expected,
                             bool paper_scale);

void validate(const ExperimentConfig& cfg);

}  // namespace hct
