// SPDX-License-Identifier: Apache-2.0
#include "hct/normal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hct/errors.hpp"

namespace hct {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;
// Beyond this the upper tail is evaluated through the continued fraction.
constexpr double kContinuedFractionFrom = 8.0;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite input");
}

// (1 - Phi(x)) / phi(x) for x >= kContinuedFractionFrom, by modified Lentz on
// x + 1/(x + 2/(x + 3/(x + ...))).
double upper_mills_cf(double x) {
  constexpr double kTiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int k = 1; k < 500; ++k) {
    d = x + k * d;
    if (d == 0.0) d = kTiny;
    c = x + k / c;
    if (c == 0.0) c = kTiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 / f;
}

template <std::size_t N>
double horner(const double (&coef)[N], double x) {
  double acc = coef[N - 1];
  for (std::size_t i = N - 1; i-- > 0;) acc = acc * x + coef[i];
  return acc;
}

// AS 241 (PPND16) coefficients, lowest order first.
constexpr double kA[] = {3.3871328727963666080e0,  1.3314166789178437745e+2,
                         1.9715909503065514427e+3, 1.3731693765509461125e+4,
                         4.5921953931549871457e+4, 6.7265770927008700853e+4,
                         3.3430575583588128105e+4, 2.5090809287301226727e+3};
constexpr double kB[] = {1.0,
                         4.2313330701600911252e+1,
                         6.8718700749205790830e+2,
                         5.3941960214247511077e+3,
                         2.1213794301586595867e+4,
                         3.9307895800092710610e+4,
                         2.8729085735721942674e+4,
                         5.2264952788528545610e+3};
constexpr double kC[] = {1.42343711074968357734e0,  4.63033784615654529590e0,
                         5.76949722146069140550e0,  3.64784832476320460504e0,
                         1.27045825245236838258e0,  2.41780725177450611770e-1,
                         2.27238449892691845833e-2, 7.74545014278341407640e-4};
constexpr double kD[] = {1.0,
                         2.05319162663775882187e0,
                         1.67638483018380384940e0,
                         6.89767334985100004550e-1,
                         1.48103976427480074590e-1,
                         1.51986665636164571966e-2,
                         5.47593808499534494600e-4,
                         1.05075007164441684324e-9};
constexpr double kE[] = {6.65790464350110377720e0,  5.46378491116411436990e0,
                         1.78482653991729133580e0,  2.96560571828504891230e-1,
                         2.65321895265761230930e-2, 1.24266094738807843860e-3,
                         2.71155556874348757815e-5, 2.01033439929228813265e-7};
constexpr double kF[] = {1.0,
                         5.99832206555887937690e-1,
                         1.36929880922735805310e-1,
                         1.48753612908506148525e-2,
                         7.86869131145613259100e-4,
                         1.84631831751005468180e-5,
                         1.42151175831644588870e-7,
                         2.04426310338993978564e-15};

}  // namespace

double std_normal_pdf(double x) {
  return std::exp(-0.5 * x * x - kLogSqrt2Pi);
}

double std_normal_cdf(double x) {
  require_finite(x, "std_normal_cdf");
  return 0.5 * std::erfc(-x * kInvSqrt2);
}

double std_normal_sf(double x) {
  require_finite(x, "std_normal_sf");
  return 0.5 * std::erfc(x * kInvSqrt2);
}

double log_std_normal_sf(double x) {
  require_finite(x, "log_std_normal_sf");
  if (x >= kContinuedFractionFrom) {
    return -0.5 * x * x - kLogSqrt2Pi + std::log(upper_mills_cf(x));
  }
  if (x < -kContinuedFractionFrom) {
    // 1 - Phi(x) = 1 - Phi(-|x|) with Phi(-|x|) tiny.
    return std::log1p(-std::exp(log_std_normal_sf(-x)));
  }
  return std::log(0.5 * std::erfc(x * kInvSqrt2));
}

TailValue std_normal_sf_tail(double x) {
  const double log_value = log_std_normal_sf(x);
  return {std::exp(log_value), log_value};
}

TailValue std_normal_cdf_tail(double x) {
  require_finite(x, "std_normal_cdf");
  const double log_value = log_std_normal_sf(-x);
  return {std_normal_cdf(x), log_value};
}

double std_normal_inv_cdf(double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("std_normal_inv_cdf: u must lie in (0,1)");
  const double q = u - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q * horner(kA, r) / horner(kB, r);
  }
  double r = std::sqrt(-std::log(q < 0.0 ? u : 1.0 - u));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = horner(kC, r) / horner(kD, r);
  } else {
    r -= 5.0;
    value = horner(kE, r) / horner(kF, r);
  }
  return q < 0.0 ? -value : value;
}

double std_normal_quantile(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("std_normal_quantile: alpha must lie in (0,1)");
  }
  if (alpha == 0.5) return 0.0;
  // Work in the tail that alpha represents accurately, then mirror.
  if (alpha > 0.5) return -std_normal_quantile(1.0 - alpha);

  double z = -std_normal_inv_cdf(alpha);
  // Newton on 1 - Phi(z) = alpha: step = (Q(z) - alpha) / phi(z).
  const double log_pdf = -0.5 * z * z - kLogSqrt2Pi;
  const double step =
      std::exp(log_std_normal_sf(z) - log_pdf) - std::exp(std::log(alpha) - log_pdf);
  z += step;
  return z;
}

double mills_ratio(double z) {
  require_finite(z, "mills_ratio");
  if (!(z > 0.0)) throw DomainError("mills_ratio: z must be positive");
  if (z >= kContinuedFractionFrom) return z * upper_mills_cf(z);
  return z * std_normal_sf(z) / std_normal_pdf(z);
}

}  // namespace hct
