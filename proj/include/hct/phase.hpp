// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string_view>

namespace hct {

/// Sparse-mean alternative: p = round(n^{1/theta}) features, a fraction
/// eps_n = p^{-beta} of which carry mean tau_n / sqrt(n), with
/// tau_n = sqrt(2 r log p).
struct SignalConfig {
  std::size_t n = 0;
  double theta = 0.5;
  std::size_t p = 0;
  double beta = 0.75;
  double r = 0.25;
  double eps_n = 0.0;
  double tau_n = 0.0;
  std::size_t k = 0;
};

enum class PhaseRegion { I, II, III, Undetectable, BelowBeta };

std::string_view to_string(PhaseRegion region);

/// Detection boundary rho_theta(beta). Accepts beta in [1/2, 1] and theta in
/// [0, 1]; the end points extend the three branches continuously.
double rho_theta(double beta, double theta);

/// The standard boundary rho_1(beta).
double rho_std(double beta);

/// Region of (beta, r) for the given theta. r == rho_theta(beta) is
/// Undetectable; beta <= 1/2 is BelowBeta.
PhaseRegion classify_region(double beta, double r, double theta);

/// Growth exponent delta(beta, r, theta) of the HC statistic under the
/// alternative. Throws NotDetectable when r <= rho_theta(beta).
double delta_exponent(double beta, double r, double theta);

/// The three-case delta formula with the case picked from r alone
/// (r < (1-theta)/4, r < 1/4, otherwise), without the detectability check.
/// Used to examine the formula on and below the boundary.
double delta_formula(double beta, double r, double theta);

/// Fills every derived field of SignalConfig. Throws DomainError for
/// out-of-range inputs.
SignalConfig make_signal_config(std::size_t n, double theta, double beta, double r);

/// Same, with an explicit feature count instead of n^{1/theta}.
SignalConfig make_signal_config_with_p(std::size_t n, std::size_t p, double theta, double beta,
                                       double r);

}  // namespace hct
