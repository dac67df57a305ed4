#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lsi/response.hpp"

#include <cmath>
#include <stdexcept>

TEST_CASE("shape function vanishes identically before the waiting time") {
  for (double y : {-1.0, 0.0, 0.25, 0.5, 0.999}) {
    CHECK(lsi::response_shape(y, 0.0, 1.0, 1.0, 1.0) == 0.0);
    CHECK(lsi::response_shape(y, -0.3, 2.1, 2.0, 3.0) == 0.0);
  }
}

TEST_CASE("shape function reproduces the flat reference point") {
  // a' = 0 and lambda_R/z = 1 give f_R(y) = y^0 (y-1)^-1; at y = 2 that is 1
  CHECK(lsi::response_shape(2.0, 0.0, 1.0, 1.0, 1.0) == 1.0);
  // generic point, checked against the explicit powers
  const double got = lsi::response_shape(3.0, -0.2, 1.5, 2.0, 0.7);
  const double want = 0.7 * std::pow(3.0, 1.0 - 0.2 - 0.75) * std::pow(2.0, -0.8);
  CHECK(got == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("coincident times are signaled, never silent") {
  // divergent edge power: a signaled infinity
  CHECK(std::isinf(lsi::response_shape(1.0, 0.0, 1.0, 1.0, 1.0)));
  // marginal edge power (-1 - a' = 0): the amplitude itself
  CHECK(lsi::response_shape(1.0, -1.0, 1.0, 1.0, 0.9) == 0.9);
  // positive edge power: a genuine zero
  CHECK(lsi::response_shape(1.0, -2.0, 1.0, 1.0, 1.0) == 0.0);
}

TEST_CASE("autoresponse carries the waiting-time prefactor") {
  // R(t, s) = s^-1 f_R(t/s) at a = 0; with f_R(2) = 1 this is exactly 1/s
  CHECK(lsi::response_scaling(2.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0) == 1.0);
  CHECK(lsi::response_scaling(4.0, 2.0, 0.0, 0.0, 1.0, 1.0, 1.0) == 0.5);
  CHECK(lsi::response_scaling(8.0, 4.0, 0.0, 0.0, 1.0, 1.0, 1.0) == 0.25);
  // before the waiting time the response is zero
  CHECK(lsi::response_scaling(1.0, 2.0, 0.0, 0.0, 1.0, 1.0, 1.0) == 0.0);

  CHECK_THROWS_AS(lsi::response_scaling(2.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(lsi::response_scaling(2.0, -1.0, 0.0, 0.0, 1.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(lsi::response_shape(2.0, 0.0, 1.0, 0.0, 1.0), std::domain_error);
}

TEST_CASE("data collapse of the scaling form is exact on the reference grid") {
  const std::vector<std::pair<double, double>> grid = {{3.0, 1.0}, {6.0, 2.0}, {12.0, 4.0}};
  CHECK(lsi::collapse_residual(grid, 0.0, 0.0, 1.0, 1.0, 1.0) == 0.0);
  // mixed-ratio samples, including pre-waiting-time points, stay collapsed
  const std::vector<std::pair<double, double>> mixed = {{2.0, 4.0}, {8.0, 4.0}, {5.0, 2.0}};
  CHECK(lsi::collapse_residual(mixed, 0.0, -0.2, 1.6, 2.0, 0.8) < 1e-14);
}

TEST_CASE("a mismatched aging exponent breaks the collapse") {
  // rescaling data generated at exponent a with a different exponent must
  // leave a visible residual; this keeps the collapse check honest
  const double a_true = 0.0, a_wrong = 0.3;
  double worst = 0.0;
  for (const auto& [t, s] : std::vector<std::pair<double, double>>{{3.0, 1.0}, {12.0, 4.0}}) {
    const double r = lsi::response_scaling(t, s, a_true, 0.0, 1.0, 1.0, 1.0);
    const double dev = std::abs(std::pow(s, 1.0 + a_wrong) * r -
                                lsi::response_shape(t / s, 0.0, 1.0, 1.0, 1.0));
    worst = std::max(worst, dev);
  }
  CHECK(worst > 0.1);
}
