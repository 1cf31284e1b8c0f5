// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace hct {

/// A probability together with its natural log. `log_value` stays finite for
/// probabilities far below the double range.
struct TailValue {
  double value = 0.0;
  double log_value = 0.0;
};

double std_normal_pdf(double x);

/// Phi(x). Rejects non-finite x.
double std_normal_cdf(double x);

/// 1 - Phi(x), computed without cancellation.
double std_normal_sf(double x);

TailValue std_normal_cdf_tail(double x);
TailValue std_normal_sf_tail(double x);

/// log(1 - Phi(x)), finite for every finite x.
double log_std_normal_sf(double x);

/// Lower-tail inverse cdf (Wichura AS 241). u in (0,1).
double std_normal_inv_cdf(double u);

/// Upper-tail quantile z_alpha with 1 - Phi(z_alpha) = alpha, alpha in (0,1).
/// AS 241 followed by one Newton step on the tail probability.
double std_normal_quantile(double alpha);

/// rho(z) = z (1 - Phi(z)) / phi(z), z > 0.
double mills_ratio(double z);

}  // namespace hct
