// SPDX-License-Identifier: Apache-2.0
#include "hct/phase.hpp"

#include <cmath>
#include <string>

#include "hct/errors.hpp"

namespace hct {
namespace {

void check_beta_theta(double beta, double theta) {
  if (!(beta >= 0.5 && beta <= 1.0)) throw DomainError("beta must lie in [1/2, 1]");
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("theta must lie in [0, 1]");
}

void check_r(double r) {
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("r must lie in (0, 1]");
}

}  // namespace

std::string_view to_string(PhaseRegion region) {
  switch (region) {
    case PhaseRegion::I: return "I";
    case PhaseRegion::II: return "II";
    case PhaseRegion::III: return "III";
    case PhaseRegion::Undetectable: return "Undetectable";
    case PhaseRegion::BelowBeta: return "BelowBeta";
  }
  return "?";
}

double rho_theta(double beta, double theta) {
  check_beta_theta(beta, theta);
  const double first_break = 0.5 + (1.0 - theta) / 4.0;
  if (beta <= first_break) {
    const double a = std::sqrt(1.0 - theta);
    const double b = std::sqrt((1.0 - theta) / 2.0 + 0.5 - beta);
    return (a - b) * (a - b);
  }
  if (beta <= 0.75) return beta - 0.5;
  const double a = 1.0 - std::sqrt(1.0 - beta);
  return a * a;
}

double rho_std(double beta) { return rho_theta(beta, 1.0); }

PhaseRegion classify_region(double beta, double r, double theta) {
  check_beta_theta(beta, theta);
  check_r(r);
  if (beta <= 0.5) return PhaseRegion::BelowBeta;
  if (r <= rho_theta(beta, theta)) return PhaseRegion::Undetectable;
  if (r < (1.0 - theta) / 4.0) return PhaseRegion::I;
  if (r < 0.25) return PhaseRegion::II;
  return PhaseRegion::III;
}

double delta_formula(double beta, double r, double theta) {
  check_beta_theta(beta, theta);
  check_r(r);
  if (r < (1.0 - theta) / 4.0) {
    const double gap = std::sqrt(1.0 - theta) - std::sqrt(r);
    return 0.5 - beta + (1.0 - theta) / 2.0 - gap * gap;
  }
  if (r < 0.25) return r - (beta - 0.5);
  const double gap = 1.0 - std::sqrt(r);
  return 1.0 - beta - gap * gap;
}

double delta_exponent(double beta, double r, double theta) {
  switch (classify_region(beta, r, theta)) {
    case PhaseRegion::BelowBeta:
      throw NotDetectable("delta_exponent: beta must exceed 1/2");
    case PhaseRegion::Undetectable:
      throw NotDetectable("delta_exponent: r <= rho_theta(beta)");
    default:
      return delta_formula(beta, r, theta);
  }
}

SignalConfig make_signal_config_with_p(std::size_t n, std::size_t p, double theta, double beta,
                                       double r) {
  if (n < 2) throw DomainError("signal config: n must be at least 2");
  if (p < 2) throw DomainError("signal config: p must be at least 2");
  if (!(theta > 0.0 && theta <= 1.0)) throw DomainError("signal config: theta must lie in (0, 1]");
  check_beta_theta(beta, theta);
  check_r(r);
  SignalConfig cfg;
  cfg.n = n;
  cfg.theta = theta;
  cfg.p = p;
  cfg.beta = beta;
  cfg.r = r;
  const double pd = static_cast<double>(p);
  cfg.eps_n = std::pow(pd, -beta);
  cfg.tau_n = std::sqrt(2.0 * r * std::log(pd));
  cfg.k = static_cast<std::size_t>(std::llround(cfg.eps_n * pd));
  return cfg;
}

SignalConfig make_signal_config(std::size_t n, double theta, double beta, double r) {
  if (!(theta > 0.0 && theta <= 1.0)) throw DomainError("signal config: theta must lie in (0, 1]");
  const double p = std::round(std::pow(static_cast<double>(n), 1.0 / theta));
  if (!(p <= 0x1.0p40)) throw ConfigError("signal config: p = n^(1/theta) is too large");
  return make_signal_config_with_p(n, static_cast<std::size_t>(p), theta, beta, r);
}

}  // namespace hct
