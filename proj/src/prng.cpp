// SPDX-License-Identifier: Apache-2.0
#include "hct/prng.hpp"

#include "hct/normal.hpp"

namespace hct {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Two independent chained hashes of the label path.
constexpr std::uint64_t absorb_a(std::uint64_t h, std::uint64_t label) {
  return mix64(h ^ mix64(label + 0x9E3779B97F4A7C15ull));
}
constexpr std::uint64_t absorb_b(std::uint64_t h, std::uint64_t label) {
  return mix64((h + 0xD1B54A32D192ED03ull) ^ mix64(label ^ 0x8CB92BA72F3D8DD7ull));
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

Generator::Generator(std::uint64_t path_hash_a, std::uint64_t path_hash_b)
    : path_a_(path_hash_a), path_b_(path_hash_b) {}

Generator::Generator(const StreamKey& key)
    : Generator(mix64(key.master_seed ^ 0x243F6A8885A308D3ull),
                mix64(key.master_seed + 0x13198A2E03707344ull)) {
  for (const auto label : key.labels) {
    const auto a = absorb_a(path_a_, label);
    const auto b = absorb_b(path_b_, label);
    path_a_ = a;
    path_b_ = b;
  }
}

Generator Generator::child(std::uint64_t label) const {
  return Generator(absorb_a(path_a_, label), absorb_b(path_b_, label));
}

Generator Generator::child(std::initializer_list<std::uint64_t> labels) const {
  std::uint64_t a = path_a_;
  std::uint64_t b = path_b_;
  for (const auto label : labels) {
    const auto na = absorb_a(a, label);
    b = absorb_b(b, label);
    a = na;
  }
  return Generator(a, b);
}

// Two consecutive blocks, interleaved so the multiply chains overlap.
void Generator::refill() {
  std::uint32_t a[4] = {static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                        static_cast<std::uint32_t>(path_b_), static_cast<std::uint32_t>(path_b_ >> 32)};
  const std::uint64_t next = block_ + 1;
  std::uint32_t b[4] = {static_cast<std::uint32_t>(next), static_cast<std::uint32_t>(next >> 32), a[2], a[3]};
  std::uint32_t k0 = static_cast<std::uint32_t>(path_a_);
  std::uint32_t k1 = static_cast<std::uint32_t>(path_a_ >> 32);
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t pa0 = std::uint64_t{kMul0} * a[0];
    const std::uint64_t pa1 = std::uint64_t{kMul1} * a[2];
    const std::uint64_t pb0 = std::uint64_t{kMul0} * b[0];
    const std::uint64_t pb1 = std::uint64_t{kMul1} * b[2];
    const std::uint32_t na0 = static_cast<std::uint32_t>(pa1 >> 32) ^ a[1] ^ k0;
    const std::uint32_t na2 = static_cast<std::uint32_t>(pa0 >> 32) ^ a[3] ^ k1;
    const std::uint32_t nb0 = static_cast<std::uint32_t>(pb1 >> 32) ^ b[1] ^ k0;
    const std::uint32_t nb2 = static_cast<std::uint32_t>(pb0 >> 32) ^ b[3] ^ k1;
    a[0] = na0;
    a[1] = static_cast<std::uint32_t>(pa1);
    a[2] = na2;
    a[3] = static_cast<std::uint32_t>(pa0);
    b[0] = nb0;
    b[1] = static_cast<std::uint32_t>(pb1);
    b[2] = nb2;
    b[3] = static_cast<std::uint32_t>(pb0);
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  for (int i = 0; i < 4; ++i) {
    buffer_[i] = a[i];
    buffer_[4 + i] = b[i];
  }
  block_ += 2;
  pos_ = 0;
}

double Generator::normal() { return std_normal_inv_cdf(uniform_open()); }

Generator derive_stream(const StreamKey& key) { return Generator(key); }

}  // namespace hct
