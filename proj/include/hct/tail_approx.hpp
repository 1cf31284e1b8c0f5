// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string_view>

namespace hct {

/// Threshold x, sample size n, population skewness gamma = E(X^3) of the
/// standardised law, and shift c >= 0 for the noncentral form.
struct ApproxInput {
  double x = 0.0;
  std::size_t n = 2;
  double gamma = 0.0;
  double c = 0.0;

  /// n^{-1/2} x^3 <= 1, where the skewness expansions are accurate.
  [[nodiscard]] bool in_validity_region() const;
};

/// Approximate tail probability with its log; `valid` is false when the input
/// lies outside the expansion's accuracy region or the correction factor
/// turned non-positive (value is then clamped to 0).
struct TailApprox {
  double value = 0.0;
  double log_value = 0.0;
  bool valid = true;
};

/// Which form of the Studentised-mean correction to use.
enum class TailForm {
  Exponential,  // (1 - Phi(x)) exp(-x^3 gamma / (3 sqrt n))
  Polynomial,   // (1 - Phi(x)) (1 - x^3 gamma / (3 sqrt n))
};

std::string_view to_string(TailForm form);
TailForm tail_form_from_string(std::string_view name);

/// P(T0 > x) approximation; exact 1 - Phi(x) when gamma = 0.
TailApprox studentized_tail_approx(const ApproxInput& in, TailForm form = TailForm::Exponential);

/// P(Z0 > x) ~ (1 - Phi(x)) (1 + x^3 gamma / (6 sqrt n)).
TailApprox standardized_tail_approx(const ApproxInput& in);

/// P(T_c > x) ~ (1 - Phi(x - c)) exp{-(2x^3 - 3cx^2 + c^3) gamma / (6 sqrt n)}.
TailApprox noncentral_tail_approx(const ApproxInput& in);

/// t_alpha ~ z_alpha (1 - gamma z_alpha / (3 sqrt n)), alpha in (0, 1/2].
double skew_corrected_quantile(double alpha, std::size_t n, double gamma);

/// P(T_c > t_alpha) ~ alpha exp{c (3 t^2 - c^2) gamma / (6 sqrt n)}
///                    (1 - Phi(t - c)) / (1 - Phi(t)),
/// with t the skew-corrected quantile.
double power_approx(double alpha, double c, std::size_t n, double gamma);

}  // namespace hct
