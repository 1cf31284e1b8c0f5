// SPDX-License-Identifier: Apache-2.0
#include "hct/tail_approx.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hct/errors.hpp"
#include "hct/normal.hpp"

namespace hct {
namespace {

void check_n(std::size_t n) {
  if (n < 2) throw DomainError("tail approximation: n must be at least 2");
}

TailApprox from_log(double log_value, bool valid) {
  return {std::exp(log_value), log_value, valid};
}

}  // namespace

bool ApproxInput::in_validity_region() const {
  return std::abs(x * x * x) <= std::sqrt(static_cast<double>(n));
}

std::string_view to_string(TailForm form) {
  return form == TailForm::Exponential ? "exponential" : "polynomial";
}

TailForm tail_form_from_string(std::string_view name) {
  if (name == "exponential") return TailForm::Exponential;
  if (name == "polynomial") return TailForm::Polynomial;
  throw ConfigError("unknown tail form '" + std::string(name) + "'");
}

TailApprox studentized_tail_approx(const ApproxInput& in, TailForm form) {
  check_n(in.n);
  const double correction = in.x * in.x * in.x * in.gamma / (3.0 * std::sqrt(double(in.n)));
  const double log_tail = log_std_normal_sf(in.x);
  const bool valid = in.in_validity_region();
  if (form == TailForm::Exponential) return from_log(log_tail - correction, valid);
  const double factor = 1.0 - correction;
  if (factor <= 0.0) return {0.0, -std::numeric_limits<double>::infinity(), false};
  return from_log(log_tail + std::log(factor), valid);
}

TailApprox standardized_tail_approx(const ApproxInput& in) {
  check_n(in.n);
  const double factor = 1.0 + in.x * in.x * in.x * in.gamma / (6.0 * std::sqrt(double(in.n)));
  if (factor <= 0.0) return {0.0, -std::numeric_limits<double>::infinity(), false};
  return from_log(log_std_normal_sf(in.x) + std::log(factor), in.in_validity_region());
}

TailApprox noncentral_tail_approx(const ApproxInput& in) {
  check_n(in.n);
  if (!(in.c >= 0.0)) throw DomainError("noncentral tail: c must be non-negative");
  const double x = in.x;
  const double c = in.c;
  const double exponent =
      (2.0 * x * x * x - 3.0 * c * x * x + c * c * c) * in.gamma / (6.0 * std::sqrt(double(in.n)));
  // Uniformity holds for 0 <= c <= u x with u < 1.
  const bool valid = in.in_validity_region() && x >= 0.0 && (c == 0.0 || c < x);
  return from_log(log_std_normal_sf(x - c) - exponent, valid);
}

double skew_corrected_quantile(double alpha, std::size_t n, double gamma) {
  check_n(n);
  if (!(alpha > 0.0 && alpha <= 0.5)) throw DomainError("skew_corrected_quantile: alpha must lie in (0, 1/2]");
  const double z = std_normal_quantile(alpha);
  return z * (1.0 - gamma * z / (3.0 * std::sqrt(double(n))));
}

double power_approx(double alpha, double c, std::size_t n, double gamma) {
  if (!(c >= 0.0)) throw DomainError("power_approx: c must be non-negative");
  const double t = skew_corrected_quantile(alpha, n, gamma);
  if (c == 0.0) return alpha;
  const double log_value = std::log(alpha) +
                           c * (3.0 * t * t - c * c) * gamma / (6.0 * std::sqrt(double(n))) +
                           log_std_normal_sf(t - c) - log_std_normal_sf(t);
  return std::exp(log_value);
}

}  // namespace hct
