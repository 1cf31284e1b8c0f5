// SPDX-License-Identifier: Apache-2.0
#include "hct/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "hct/errors.hpp"

namespace hct {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Stream labels used below a caller-supplied generator.
constexpr std::uint64_t kColumnLabel = 1;
constexpr std::uint64_t kSelectLabel = 2;
constexpr std::uint64_t kRowLabel = 3;

// E|N|^q for N standard normal.
double abs_normal_moment(double q) {
  return std::exp(0.5 * q * std::numbers::ln2 + std::lgamma(0.5 * (q + 1.0)) -
                  0.5 * std::log(std::numbers::pi));
}

// E U^j for U = N^m |N|.
double normal_abs_pow_raw_moment(int m, int j) {
  if ((m * j) % 2 != 0) return 0.0;
  return abs_normal_moment(static_cast<double>((m + 1) * j));
}

void validate(const DistSpec& spec) {
  std::visit(Overloaded{
                 [](const ParetoShapeScale& d) {
                   if (!(d.shape > 0.0 && d.scale > 0.0)) {
                     throw DomainError("Pareto: shape and scale must be positive");
                   }
                 },
                 [](const FisherF& d) {
                   if (d.d1 < 1 || d.d2 < 1) throw DomainError("F: degrees of freedom must be >= 1");
                 },
                 [](const ChiSquared& d) {
                   if (d.k < 1) throw DomainError("chi-squared: k must be >= 1");
                 },
                 [](const NormalAbsPow& d) {
                   if (d.m < 0) throw DomainError("N^m|N|: m must be >= 0");
                 },
                 [](const StdNormal&) {},
             },
             spec.kind);
}

// Chi-squared with integer degrees of freedom: pairs of degrees come from
// -2 log of a product of uniforms, an odd remainder from one squared normal.
double sample_chi_squared(int k, Generator& g) {
  double total = 0.0;
  int pairs = k / 2;
  while (pairs > 0) {
    const int chunk = std::min(pairs, 16);
    double product = 1.0;
    for (int i = 0; i < chunk; ++i) product *= g.uniform_open();
    total -= 2.0 * std::log(product);
    pairs -= chunk;
  }
  if (k % 2 != 0) {
    const double z = g.normal();
    total += z * z;
  }
  return total;
}

}  // namespace

std::string describe(const DistSpec& spec) {
  const std::string base = std::visit(
      Overloaded{
          [](const ParetoShapeScale& d) {
            return "Pareto(" + std::to_string(d.shape) + "," + std::to_string(d.scale) + ")";
          },
          [](const FisherF& d) {
            return "FisherF(" + std::to_string(d.d1) + "," + std::to_string(d.d2) + ")";
          },
          [](const ChiSquared& d) { return "ChiSquared(" + std::to_string(d.k) + ")"; },
          [](const NormalAbsPow& d) { return "NormalAbsPow(" + std::to_string(d.m) + ")"; },
          [](const StdNormal&) { return std::string("StdNormal"); },
      },
      spec.kind);
  return spec.standardized ? base : base + "[raw]";
}

RawMoments standardizing_moments(const DistSpec& spec) {
  validate(spec);
  return std::visit(
      Overloaded{
          [](const ParetoShapeScale& d) {
            const double a = d.shape;
            const double b = d.scale;
            if (!(a > 2.0)) throw InfiniteMoment("Pareto: variance requires shape > 2");
            return RawMoments{a * b / (a - 1.0), b * b * a / ((a - 1.0) * (a - 1.0) * (a - 2.0))};
          },
          [](const FisherF& d) {
            const double d1 = d.d1;
            const double d2 = d.d2;
            if (!(d2 > 4.0)) throw InfiniteMoment("F: variance requires d2 > 4");
            const double mean = d2 / (d2 - 2.0);
            const double var =
                2.0 * d2 * d2 * (d1 + d2 - 2.0) / (d1 * (d2 - 2.0) * (d2 - 2.0) * (d2 - 4.0));
            return RawMoments{mean, var};
          },
          [](const ChiSquared& d) { return RawMoments{double(d.k), 2.0 * d.k}; },
          [](const NormalAbsPow& d) {
            const double mean = normal_abs_pow_raw_moment(d.m, 1);
            const double second = normal_abs_pow_raw_moment(d.m, 2);
            return RawMoments{mean, second - mean * mean};
          },
          [](const StdNormal&) { return RawMoments{0.0, 1.0}; },
      },
      spec.kind);
}

double standardized_skewness(const DistSpec& spec) {
  validate(spec);
  return std::visit(
      Overloaded{
          [](const ParetoShapeScale& d) {
            const double a = d.shape;
            if (!(a > 3.0)) throw InfiniteMoment("Pareto: skewness requires shape > 3");
            return 2.0 * (1.0 + a) / (a - 3.0) * std::sqrt((a - 2.0) / a);
          },
          [](const FisherF& d) {
            const double d1 = d.d1;
            const double d2 = d.d2;
            if (!(d2 > 6.0)) throw InfiniteMoment("F: skewness requires d2 > 6");
            return (2.0 * d1 + d2 - 2.0) * std::sqrt(8.0 * (d2 - 4.0)) /
                   ((d2 - 6.0) * std::sqrt(d1 * (d1 + d2 - 2.0)));
          },
          [](const ChiSquared& d) { return std::sqrt(8.0 / d.k); },
          [](const NormalAbsPow& d) {
            const double mu = normal_abs_pow_raw_moment(d.m, 1);
            const double m2 = normal_abs_pow_raw_moment(d.m, 2);
            const double m3 = normal_abs_pow_raw_moment(d.m, 3);
            const double var = m2 - mu * mu;
            return (m3 - 3.0 * mu * m2 + 2.0 * mu * mu * mu) / std::pow(var, 1.5);
          },
          [](const StdNormal&) { return 0.0; },
      },
      spec.kind);
}

Sampler::Sampler(const DistSpec& spec) : spec_(spec) {
  validate(spec_);
  if (spec_.standardized) {
    const RawMoments m = standardizing_moments(spec_);
    shift_ = m.mean;
    scale_ = 1.0 / std::sqrt(m.var);
  }
}

double Sampler::raw(Generator& g) const {
  return std::visit(
      Overloaded{
          [&g](const ParetoShapeScale& d) {
            return d.scale * std::exp(-std::log(g.uniform_open()) / d.shape);
          },
          [&g](const FisherF& d) {
            const double num = sample_chi_squared(d.d1, g) / d.d1;
            const double den = sample_chi_squared(d.d2, g) / d.d2;
            return num / den;
          },
          [&g](const ChiSquared& d) { return sample_chi_squared(d.k, g); },
          [&g](const NormalAbsPow& d) {
            const double z = g.normal();
            double u = std::abs(z);
            for (int i = 0; i < d.m; ++i) u *= z;
            return u;
          },
          [&g](const StdNormal&) { return g.normal(); },
      },
      spec_.kind);
}

double Sampler::operator()(Generator& g) const { return (raw(g) - shift_) * scale_; }

void Sampler::fill(std::span<double> out, Generator& g) const {
  for (double& v : out) v = (*this)(g);
}

Sample sample_iid(const DistSpec& spec, std::size_t n, Generator& g) {
  const Sampler sampler(spec);
  std::vector<double> values(n);
  sampler.fill(values, g);
  return Sample(std::move(values));
}

namespace {

struct MaWeights {
  std::vector<double> weights;
  double offset = 0.0;
  double inv_sd = 1.0;
};

MaWeights ma_weights(const MaStreamSpec& spec) {
  if (!(spec.theta >= 0.0 && spec.theta < 1.0)) throw DomainError("MA stream: theta must lie in [0,1)");
  if (spec.lag < 0) throw DomainError("MA stream: lag must be >= 0");
  MaWeights w;
  w.weights.resize(static_cast<std::size_t>(spec.lag) + 1);
  double power = 1.0;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (auto& weight : w.weights) {
    weight = power;
    sum += power;
    sum_sq += power * power;
    power *= spec.theta;
  }
  double mu = 0.0;
  double var = 1.0;
  if (!spec.innovation.standardized) {
    const RawMoments m = standardizing_moments(spec.innovation);
    mu = m.mean;
    var = m.var;
  }
  w.offset = mu * sum;
  w.inv_sd = 1.0 / std::sqrt(var * sum_sq);
  return w;
}

}  // namespace

FeatureMatrix sample_ma_matrix(const MaStreamSpec& spec, std::size_t n, std::size_t p,
                               const Generator& g) {
  if (p < 1) throw DomainError("MA matrix: p must be >= 1");
  const MaWeights w = ma_weights(spec);
  const Sampler innovation(spec.innovation);
  const std::size_t lag = w.weights.size() - 1;
  FeatureMatrix out(n, p);
  std::vector<double> eps(p + lag);
  for (std::size_t i = 0; i < n; ++i) {
    Generator row = g.child({kRowLabel, i});
    innovation.fill(eps, row);
    for (std::size_t k = 0; k < p; ++k) {
      double u = 0.0;
      for (std::size_t j = 0; j <= lag; ++j) u += w.weights[j] * eps[k + j];
      out.at(i, k) = (u - w.offset) * w.inv_sd;
    }
  }
  return out;
}

void sample_ma_column(const MaStreamSpec& spec, std::span<double> out, Generator& g) {
  const MaWeights w = ma_weights(spec);
  const Sampler innovation(spec.innovation);
  for (double& v : out) {
    double u = 0.0;
    for (const double weight : w.weights) u += weight * innovation(g);
    v = (u - w.offset) * w.inv_sd;
  }
}

SignalMatrix sample_signal_matrix(const SignalConfig& cfg, const DistSpec& spec, Hypothesis h,
                                  const Generator& g) {
  if (cfg.n < 2 || cfg.p < 1) throw ConfigError("signal matrix: need n >= 2 and p >= 1");
  if (h == Hypothesis::H1 && cfg.k == 0) {
    throw ConfigError("signal matrix: k = round(eps_n * p) is 0, the alternative has no signal");
  }
  if (cfg.k > cfg.p) throw ConfigError("signal matrix: k exceeds p");
  const Sampler sampler(spec);
  SignalMatrix out{FeatureMatrix(cfg.n, cfg.p), {}, 0.0};
  for (std::size_t j = 0; j < cfg.p; ++j) {
    Generator col = g.child({kColumnLabel, j});
    sampler.fill(out.data.column(j), col);
  }
  if (h == Hypothesis::H0) return out;

  // Partial Fisher-Yates picks k distinct columns.
  Generator pick = g.child(kSelectLabel);
  std::vector<std::size_t> index(cfg.p);
  std::iota(index.begin(), index.end(), std::size_t{0});
  for (std::size_t i = 0; i < cfg.k; ++i) {
    const auto remaining = static_cast<std::uint32_t>(cfg.p - i);
    std::swap(index[i], index[i + pick.below(remaining)]);
  }
  out.shifted.assign(index.begin(), index.begin() + static_cast<std::ptrdiff_t>(cfg.k));
  std::sort(out.shifted.begin(), out.shifted.end());
  out.shift = cfg.tau_n / std::sqrt(static_cast<double>(cfg.n));
  for (const std::size_t j : out.shifted) {
    for (double& v : out.data.column(j)) v += out.shift;
  }
  return out;
}

}  // namespace hct
