// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hct/prng.hpp"

namespace hct {

/// Sorted bootstrap-t statistics T0* = sqrt(n) (mean* - mean) / S* for one
/// sample, i.e. the empirical G-hat. Resamples with S* == 0 are dropped and
/// counted.
struct BootstrapDraws {
  std::vector<double> sorted_t;
  std::size_t n_degenerate = 0;
  std::size_t b_requested = 0;

  [[nodiscard]] std::size_t effective() const { return sorted_t.size(); }
  /// At most 1% of the resamples were degenerate.
  [[nodiscard]] bool reliable() const { return n_degenerate * 100 <= b_requested; }
};

/// ceil(100 / alpha_min), the smallest B giving a usable tail up to
/// alpha_min. alpha_min in (0, 1/2].
std::size_t min_resamples(double alpha_min);

/// 1-indexed rank of the order statistic used as the (1 - alpha) quantile of
/// `effective` draws: effective - floor(alpha * effective). Throws
/// InsufficientResamples when effective < ceil(1/alpha).
std::size_t quantile_rank(std::size_t effective, double alpha);

/// B resamples of x drawn with replacement from g. Throws DegenerateSample
/// when x itself is constant.
BootstrapDraws bootstrap_t_draws(std::span<const double> x, std::size_t B, Generator& g);

/// The smallest draw t with #{draws > t} <= alpha * B', i.e.
/// sorted_t[quantile_rank(B', alpha)] (1-indexed).
double bootstrap_quantile(const BootstrapDraws& d, double alpha);

/// Outcome of comparing one statistic against a bootstrap distribution
/// without materialising it.
struct BootstrapRank {
  std::size_t below = 0;      // draws strictly less than the statistic
  std::size_t effective = 0;  // non-degenerate draws
  std::size_t n_degenerate = 0;

  /// statistic > bootstrap_quantile(draws, alpha), for the rank of alpha.
  [[nodiscard]] bool exceeds(std::size_t rank) const { return below >= rank; }
};

/// Same resamples as bootstrap_t_draws for the same generator state, but only
/// counts how many fall strictly below `statistic`. O(B n) time, O(1) memory.
BootstrapRank bootstrap_rank(std::span<const double> x, std::size_t B, double statistic,
                             Generator& g);

}  // namespace hct
