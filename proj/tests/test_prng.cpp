// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <vector>

#include "doctest.h"
#include "hct/experiments.hpp"
#include "hct/prng.hpp"

using namespace hct;

TEST_CASE("philox known-answer vectors") {
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) ==
        std::array<std::uint32_t, 4>{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32_10({~0u, ~0u, ~0u, ~0u}, {~0u, ~0u}) ==
        std::array<std::uint32_t, 4>{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
}

TEST_CASE("same key gives the same stream") {
  Generator a = derive_stream({1, {0}});
  Generator b = derive_stream({1, {0}});
  for (int i = 0; i < 1000; ++i) REQUIRE(a.uniform01() == b.uniform01());
}

TEST_CASE("seed and label change the stream") {
  Generator a = derive_stream({1, {0}});
  Generator b = derive_stream({2, {0}});
  Generator c = derive_stream({1, {1}});
  int same_b = 0;
  int same_c = 0;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    same_b += x == b.next_u64();
    same_c += x == c.next_u64();
  }
  CHECK(same_b == 0);
  CHECK(same_c == 0);
}

TEST_CASE("child streams equal explicit label paths") {
  const Generator root = derive_stream({7, {3}});
  Generator a = root.child({4, 5});
  Generator b = root.child(4).child(5);
  Generator c = derive_stream({7, {3, 4, 5}});
  for (int i = 0; i < 16; ++i) {
    const auto x = a.next_u32();
    CHECK(x == b.next_u32());
    CHECK(x == c.next_u32());
  }
}

TEST_CASE("sibling streams pass a two-sample KS test") {
  constexpr std::size_t n = 1'000'000;
  Generator a = derive_stream({1, {0}});
  Generator b = derive_stream({1, {1}});
  std::vector<double> u(n);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = a.uniform01();
    v[i] = b.uniform01();
  }
  // Critical value of the two-sample KS statistic at level 0.001.
  CHECK(ks_distance(u, v) < 1.949 * std::sqrt(2.0 / n));
}

TEST_CASE("uniform01 moments and range") {
  constexpr std::size_t n = 1'000'000;
  Generator g = derive_stream({11, {}});
  double sum = 0.0;
  double sq = 0.0;
  bool in_range = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = g.uniform01();
    in_range = in_range && u >= 0.0 && u < 1.0;
    sum += u;
    sq += u * u;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(in_range);
  CHECK(mean >= 0.498);
  CHECK(mean <= 0.502);
  CHECK(var >= 0.0830);
  CHECK(var <= 0.0837);
}

TEST_CASE("bounded integers are uniform") {
  Generator g = derive_stream({5, {}});
  std::vector<int> counts(7, 0);
  constexpr int n = 700'000;
  for (int i = 0; i < n; ++i) ++counts[g.below(7)];
  for (const int c : counts) CHECK(std::abs(c - n / 7) < 5 * std::sqrt(n / 7.0));
}
