// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hct {

/// Address of a random stream: a master seed plus an ordered label path
/// (experiment, replicate, feature, ...).
struct StreamKey {
  std::uint64_t master_seed = 0;
  std::vector<std::uint64_t> labels;
};

/*!
 * Counter-based generator (Philox4x32-10).
 *
 * The stream identity is a 64-bit Philox key plus the upper half of the
 * 128-bit counter, both obtained by hashing the key path. The lower half of
 * the counter is the block index, so a stream can be addressed at any
 * position without stepping through earlier draws and never wraps before
 * 2^64 blocks.
 */
class Generator {
 public:
  explicit Generator(const StreamKey& key);

  /// Stream keyed by this stream's path with `label` appended. Does not
  /// consume draws from this generator.
  [[nodiscard]] Generator child(std::uint64_t label) const;
  [[nodiscard]] Generator child(std::initializer_list<std::uint64_t> labels) const;

  std::uint32_t next_u32() {
    if (pos_ == buffer_.size()) refill();
    return buffer_[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on the open interval (0, 1).
  double uniform_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Unbiased integer in [0, bound), bound >= 1 (Lemire's method).
  std::uint32_t below(std::uint32_t bound) {
    std::uint64_t m = std::uint64_t{next_u32()} * bound;
    auto low = static_cast<std::uint32_t>(m);
    if (low < bound) {
      const std::uint32_t threshold = (0u - bound) % bound;
      while (low < threshold) {
        m = std::uint64_t{next_u32()} * bound;
        low = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

  /// Standard normal variate by inverse-cdf transform of one open uniform.
  double normal();

  /// Number of 128-bit blocks consumed so far.
  [[nodiscard]] std::uint64_t blocks_used() const { return block_; }

 private:
  Generator(std::uint64_t path_hash_a, std::uint64_t path_hash_b);
  void refill();

  std::uint64_t path_a_;  // Philox key
  std::uint64_t path_b_;  // upper counter half
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 8> buffer_{};
  std::size_t pos_ = 8;
};

Generator derive_stream(const StreamKey& key);

/// Uniform draw on [0,1).
inline double uniform01(Generator& g) { return g.uniform01(); }

/// One Philox4x32-10 block for the given counter and key. Exposed for tests.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

}  // namespace hct
