// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "hct/errors.hpp"
#include "hct/phase.hpp"

using namespace hct;
using doctest::Approx;

TEST_CASE("standard boundary") {
  CHECK(rho_std(0.6) == Approx(0.1));
  CHECK(rho_std(0.75) == Approx(0.25));
  CHECK(rho_std(0.96) == Approx(0.64));
}

TEST_CASE("phase function values") {
  for (const double t : {0.0, 0.25, 0.5, 0.75, 1.0}) CHECK(rho_theta(0.75, t) == Approx(0.25));
  CHECK(rho_theta(0.6, 0.5) == Approx(0.1022774425).epsilon(1e-9));
  for (int i = 0; i <= 50; ++i) {
    const double b = 0.5 + 0.01 * i;
    CHECK(rho_theta(b, 0.0) == Approx(std::pow(1 - std::sqrt(1 - b), 2)).epsilon(1e-12));
    CHECK(rho_theta(b, 1.0) == Approx(rho_std(b)).epsilon(1e-12));
  }
}

TEST_CASE("phase function dominates the standard boundary and decreases in theta") {
  for (int i = 0; i <= 50; ++i) {
    const double b = 0.5 + 0.01 * i;
    double prev = 1e9;
    for (const double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const double r = rho_theta(b, t);
      CHECK(r >= rho_std(b) - 1e-12);
      CHECK(r <= prev + 1e-12);
      prev = r;
    }
  }
}

TEST_CASE("region classification") {
  CHECK(classify_region(0.6, 0.11, 0.5) == PhaseRegion::I);
  CHECK(classify_region(0.6, 0.2, 0.5) == PhaseRegion::II);
  CHECK(classify_region(0.6, 0.3, 0.5) == PhaseRegion::III);
  CHECK(classify_region(0.6, rho_theta(0.6, 0.5), 0.5) == PhaseRegion::Undetectable);
  CHECK(classify_region(0.5, 0.3, 0.5) == PhaseRegion::BelowBeta);
  CHECK_THROWS_AS(delta_exponent(0.6, 0.05, 0.5), NotDetectable);
  CHECK_THROWS_AS(rho_theta(0.4, 0.5), DomainError);
}

TEST_CASE("delta vanishes on the boundary and is continuous across regions") {
  for (int i = 0; i < 50; ++i) {
    const double b = 0.5 + 0.5 * (i + 0.5) / 50.0;
    for (int k = 1; k <= 9; ++k) {
      const double t = k / 10.0;
      CHECK(std::abs(delta_formula(b, rho_theta(b, t), t)) <= 1e-12);
      const double r1 = (1 - t) / 4;
      CHECK(std::abs(delta_formula(b, std::nextafter(r1, 0.0), t) - delta_formula(b, r1, t)) <= 1e-12);
      CHECK(std::abs(delta_formula(b, std::nextafter(0.25, 0.0), t) - delta_formula(b, 0.25, t)) <= 1e-12);
    }
  }
  CHECK(delta_formula(0.6, 0.25, 0.5) == Approx(0.75 - 0.6));
}

TEST_CASE("signal configuration") {
  const SignalConfig c = make_signal_config(100, 0.5, 0.75, 0.25);
  CHECK(c.p == 10000);
  CHECK(c.eps_n == Approx(1e-3));
  CHECK(c.k == 10);
  CHECK(c.tau_n == Approx(2.14596603).epsilon(1e-8));
  CHECK_THROWS(make_signal_config(100, 0.5, 0.75, 0.0));
}
