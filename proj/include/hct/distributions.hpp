// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hct/phase.hpp"
#include "hct/prng.hpp"
#include "hct/stats_core.hpp"

namespace hct {

/// Pareto with density a b^a / u^{a+1} on [b, inf).
struct ParetoShapeScale {
  double shape = 5.0;
  double scale = 5.0;
};
struct FisherF {
  int d1 = 5;
  int d2 = 5;
};
struct ChiSquared {
  int k = 10;
};
/// U = N^m |N| with N standard normal.
struct NormalAbsPow {
  int m = 1;
};
struct StdNormal {};

using DistKind = std::variant<ParetoShapeScale, FisherF, ChiSquared, NormalAbsPow, StdNormal>;

struct DistSpec {
  DistKind kind = StdNormal{};
  bool standardized = true;
};

/// Human-readable label, e.g. "FisherF(5,5)".
std::string describe(const DistSpec& spec);

struct RawMoments {
  double mean = 0.0;
  double var = 0.0;
};

/// Closed-form mean and variance of the raw law U. Throws InfiniteMoment when
/// the variance diverges.
RawMoments standardizing_moments(const DistSpec& spec);

/// gamma = E(X^3) of the standardised law. Throws InfiniteMoment when the
/// third moment diverges.
double standardized_skewness(const DistSpec& spec);

/// Draws from a DistSpec, standardising with closed-form moments when asked.
class Sampler {
 public:
  explicit Sampler(const DistSpec& spec);

  double operator()(Generator& g) const;
  void fill(std::span<double> out, Generator& g) const;

  [[nodiscard]] const DistSpec& spec() const { return spec_; }

 private:
  double raw(Generator& g) const;

  DistSpec spec_;
  double shift_ = 0.0;
  double scale_ = 1.0;
};

Sample sample_iid(const DistSpec& spec, std::size_t n, Generator& g);

/// n x p matrix stored column-major: each feature's n observations are
/// contiguous.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  [[nodiscard]] std::span<const double> column(std::size_t j) const {
    return {data_.data() + j * rows_, rows_};
  }
  std::span<double> column(std::size_t j) { return {data_.data() + j * rows_, rows_}; }

  double& at(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
  [[nodiscard]] double at(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Moving-average feature stream U_k = sum_{j=0}^{lag} theta^j eps_{j+k}.
struct MaStreamSpec {
  double theta = 0.5;
  int lag = 10;
  DistSpec innovation;
};

/// Each row draws one innovation vector of length p + lag from the row's own
/// child stream; columns are standardised with var U = sum theta^{2j}.
FeatureMatrix sample_ma_matrix(const MaStreamSpec& spec, std::size_t n, std::size_t p,
                               const Generator& g);

/// One standardised MA feature of length n built from fresh innovations.
void sample_ma_column(const MaStreamSpec& spec, std::span<double> out, Generator& g);

enum class Hypothesis { H0, H1 };

struct SignalMatrix {
  FeatureMatrix data;
  /// Sorted indices of the columns carrying the mean shift (empty under H0).
  std::vector<std::size_t> shifted;
  double shift = 0.0;
};

/// cfg.n x cfg.p matrix of i.i.d. draws from `spec`. Under H1, cfg.k randomly
/// chosen columns get tau_n / sqrt(n) added to every entry. Throws ConfigError
/// when cfg.k == 0 under H1.
SignalMatrix sample_signal_matrix(const SignalConfig& cfg, const DistSpec& spec, Hypothesis h,
                                  const Generator& g);

}  // namespace hct
