// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "hct/normal.hpp"
#include "hct/tail_approx.hpp"

using namespace hct;
using doctest::Approx;

TEST_CASE("studentised tail") {
  CHECK(studentized_tail_approx({2.0, 100, 0.0, 0.0}).value == Approx(0.0227501319).epsilon(1e-9));
  CHECK(studentized_tail_approx({2.0, 100, 1.0, 0.0}).value == Approx(0.0174249708).epsilon(1e-9));
  CHECK(studentized_tail_approx({0.0, 100, 1.0, 0.0}).value == Approx(0.5));
  CHECK(studentized_tail_approx({2.0, 100, 1.0, 0.0}, TailForm::Polynomial).value ==
        Approx(0.0227501319 * (1.0 - 8.0 / 30.0)).epsilon(1e-9));
  CHECK_FALSE(studentized_tail_approx({3.0, 100, 1.0, 0.0}).valid);
  CHECK(tail_form_from_string(to_string(TailForm::Polynomial)) == TailForm::Polynomial);
}

TEST_CASE("standardised tail") {
  for (const double x : {0.5, 1.0, 2.5}) {
    CHECK(standardized_tail_approx({x, 50, 0.0, 0.0}).value == Approx(std_normal_sf(x)));
  }
  CHECK(standardized_tail_approx({2.0, 100, 1.0, 0.0}).value == Approx(0.0257834829).epsilon(1e-9));
}

TEST_CASE("relative errors are in ratio -2") {
  const double q = std_normal_sf(1.0);
  const double deficit = studentized_tail_approx({1.0, 10000, 1.0, 0.0}).value / q - 1.0;
  const double excess = standardized_tail_approx({1.0, 10000, 1.0, 0.0}).value / q - 1.0;
  CHECK(deficit / excess == Approx(-2.0).epsilon(0.01));
}

TEST_CASE("noncentral tail") {
  for (const double x : {0.5, 1.5, 2.0}) {
    for (const double g : {-0.5, 0.0, 0.8}) {
      CHECK(noncentral_tail_approx({x, 80, g, 0.0}).value ==
            Approx(studentized_tail_approx({x, 80, g, 0.0}).value));
    }
  }
  CHECK(noncentral_tail_approx({2.0, 100, 0.0, 1.0}).value == Approx(0.158655254).epsilon(1e-8));
  CHECK(noncentral_tail_approx({2.0, 100, 0.5, 1.0}).value == Approx(0.152180447).epsilon(1e-8));
}

TEST_CASE("skew-corrected quantile and power") {
  CHECK(skew_corrected_quantile(0.05, 100, 0.0) == Approx(1.64485362695));
  CHECK(skew_corrected_quantile(0.05, 100, 0.894) == Approx(1.56422843).epsilon(1e-8));
  CHECK(skew_corrected_quantile(0.05, 100, 0.894) < std_normal_quantile(0.05));
  CHECK(power_approx(0.05, 0.0, 100, 0.8) == 0.05);
  CHECK(power_approx(0.05, 1.0, 100, 0.0) == Approx(0.259511023).epsilon(1e-8));
  CHECK(power_approx(0.05, 1.0, 100, 0.8) == Approx(0.266655582).epsilon(1e-8));
}
