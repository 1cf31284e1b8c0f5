// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <vector>

#include "doctest.h"
#include "hct/distributions.hpp"
#include "hct/errors.hpp"
#include "hct/stats_core.hpp"

using namespace hct;
using doctest::Approx;

TEST_CASE("sample validation") {
  CHECK_THROWS_AS(Sample({1.0}), DomainError);
  CHECK_THROWS_AS(Sample({1.0, NAN}), DomainError);
  CHECK(Sample({1.0, 2.0}).size() == 2);
}

TEST_CASE("moment summaries") {
  const std::vector<double> a{1, -1, 1, -1};
  const MomentSummary s = summarize(a);
  CHECK(s.mean == 0.0);
  CHECK(s.s2 == Approx(1.0));
  REQUIRE(s.gamma3_hat);
  CHECK(*s.gamma3_hat == Approx(0.0));

  const MomentSummary t = summarize(std::vector<double>{0, 1, 2});
  CHECK(t.mean == Approx(1.0));
  CHECK(t.s2 == Approx(2.0 / 3.0));
  CHECK(*t.gamma3_hat == Approx(0.0));

  const MomentSummary c = summarize(std::vector<double>{2, 2, 2});
  CHECK(c.s2 == 0.0);
  CHECK_FALSE(c.gamma3_hat.has_value());
  CHECK_FALSE(c.gamma4_hat.has_value());
}

TEST_CASE("studentised statistic") {
  CHECK(t_statistic(std::vector<double>{1, -1, 1, -1}) == Approx(0.0));
  CHECK(t_statistic(std::vector<double>{0, 1, 2}) == Approx(std::sqrt(4.5)).epsilon(1e-12));
  CHECK(t_statistic(std::vector<double>{0, 5, 10}) == Approx(t_statistic(std::vector<double>{0, 1, 2})));
  CHECK_THROWS_AS(t_statistic(std::vector<double>{3, 3, 3}), DegenerateSample);
}

TEST_CASE("standardised statistic") {
  CHECK(z_statistic(std::vector<double>{1, -1}, 1.0) == 0.0);
  CHECK(z_statistic(std::vector<double>{0, 1, 2}, 1.0) == Approx(std::sqrt(3.0)));
  CHECK(z_statistic(std::vector<double>{0, 1, 2}, 2.0) == Approx(std::sqrt(3.0) / 2.0));
}

TEST_CASE("shifted statistic") {
  const std::vector<double> x{0, 1, 2};
  CHECK(shifted_t_statistic(x, 0.0) == Approx(t_statistic(x)));
  CHECK(shifted_t_statistic(x, 1.0) == Approx(std::sqrt(4.5) + std::sqrt(1.5)).epsilon(1e-12));
  Generator g = derive_stream({3, {}});
  for (int i = 0; i < 100; ++i) {
    const Sample s = sample_iid(DistSpec{StdNormal{}}, 12, g);
    const double S = std::sqrt(summarize(s).s2);
    CHECK(shifted_t_statistic(s, 0.7) - t_statistic(s) == Approx(0.7 / S));
  }
}
