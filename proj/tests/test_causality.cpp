#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lsi/causality.hpp"
#include "lsi/quadrature.hpp"

#include <boost/math/special_functions/digamma.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

using lsi::CausalityReport;
using lsi::ContourSpec;
using lsi::DualizationTask;
using lsi::HalfPlane;
using lsi::PairEntry;
using lsi::QuadResult;

namespace {

using cplx = std::complex<double>;
constexpr double PI = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

// Closed forms of the line integral above the cut, independent of the contour
// machinery: for n = 0 the gamma-function formula, for n = 1 its exponent
// derivative, which brings in the digamma function.
cplx ip0_closed(double x) { return 2.0 * PI * std::exp(-I * PI * x / 2.0) / std::tgamma(x); }
cplx ip1_closed(double x) {
  return 2.0 * PI * std::exp(-I * PI * x / 2.0) * (I * PI / 2.0 + boost::math::digamma(x)) /
         std::tgamma(x);
}

ContourSpec spec_of(HalfPlane hp) {
  ContourSpec s;
  s.half_plane = hp;
  return s;
}

// independent discretization: wider window, deeper tails, doubled panels
ContourSpec scheme_b(HalfPlane hp) {
  ContourSpec s;
  s.L = 80.0;
  s.tail_depth = 40.0;
  s.nodes_per_segment = 16;
  s.half_plane = hp;
  return s;
}

double rel(const cplx& got, const cplx& want) { return std::abs(got - want) / std::abs(want); }

DualizationTask base_task(double x, double xi_sum) {
  DualizationTask task;
  task.x = x;
  task.xi_sum = xi_sum;
  task.log_mix = 0.4;
  task.mass = 1.0;
  task.g0 = 1.3;
  task.h0 = 0.7;
  task.grid = DualizationTask::default_grid();
  return task;
}

}  // namespace

TEST_CASE("complex quadrature wrapper integrates a smooth oscillation") {
  const QuadResult q = lsi::integrate_complex(
      [](double s) { return std::exp(I * s); }, 0.0, PI, 4);
  CHECK(std::abs(q.value - cplx(0.0, 2.0)) < 1e-12);
  CHECK(q.error < 1e-10);
  CHECK_THROWS_AS(lsi::integrate_complex([](double) { return cplx{}; }, 0.0, 1.0, 0),
                  std::invalid_argument);
}

TEST_CASE("closed-form oracle reproduces the frozen reference values") {
  // x = 1: the integral reduces to a clockwise residue, value -2*pi*i
  CHECK(std::abs(ip0_closed(1.0) - cplx(0.0, -2.0 * PI)) < 1e-13);
  // x = 1/2: sqrt(2*pi) * (1 - i)
  const cplx want = std::sqrt(2.0 * PI) * cplx(1.0, -1.0);
  CHECK(std::abs(ip0_closed(0.5) - want) < 1e-13);
}

TEST_CASE("cut-wrapped line integral matches the gamma-function closed form") {
  const ContourSpec above = spec_of(HalfPlane::above);
  for (double x : {0.5, 0.8, 1.0, 1.3, 1.5, 2.2, 2.5}) {
    const QuadResult q0 = lsi::integral_I(0, x, above);
    CHECK(rel(q0.value, ip0_closed(x)) < 1e-9);
    CHECK(q0.error < 1e-8);
    const QuadResult q1 = lsi::integral_I(1, x, above);
    CHECK(rel(q1.value, ip1_closed(x)) < 1e-9);
  }
}

TEST_CASE("below-line integral vanishes for every probe exponent") {
  const ContourSpec below = spec_of(HalfPlane::below);
  for (double x : {0.3, 0.7, 1.0, 1.5, 2.5}) {
    for (int n : {0, 1}) {
      const QuadResult q = lsi::integral_I(n, x, below);
      CHECK(std::abs(q.value) < 1e-8);
      CHECK(q.error < 1e-8);
    }
  }
}

TEST_CASE("contour values are independent of the truncation geometry") {
  const ContourSpec above = spec_of(HalfPlane::above);
  const ContourSpec below = spec_of(HalfPlane::below);
  for (double x : {0.7, 1.5}) {
    const cplx base = lsi::integral_I(0, x, above).value;

    ContourSpec wide = above;
    wide.L *= 2.0;
    CHECK(rel(lsi::integral_I(0, x, wide).value, base) < 1e-8);

    ContourSpec deep = above;
    deep.tail_depth *= 2.0;
    CHECK(rel(lsi::integral_I(0, x, deep).value, base) < 1e-8);

    CHECK(rel(lsi::integral_I(0, x, scheme_b(HalfPlane::above)).value, base) < 1e-8);

    // the staple stays at zero under the same deformations plus a closer line
    ContourSpec close = below;
    close.epsilon /= 2.0;
    CHECK(std::abs(lsi::integral_I(0, x, close).value) < 1e-8);
    CHECK(std::abs(lsi::integral_I(0, x, scheme_b(HalfPlane::below)).value) < 1e-8);
  }
}

TEST_CASE("line integral rejects invalid inputs") {
  CHECK_THROWS_AS(lsi::integral_I(2, 1.0, {}), std::invalid_argument);
  CHECK_THROWS_AS(lsi::integral_I(0, 0.0, {}), std::domain_error);
  CHECK_THROWS_AS(lsi::integral_I(0, -0.5, {}), std::domain_error);

  ContourSpec bad;
  bad.epsilon = 1.5;
  CHECK_THROWS_AS(lsi::integral_I(0, 1.0, bad), std::invalid_argument);
  bad = ContourSpec{};
  bad.L = 5.0;
  CHECK_THROWS_AS(lsi::integral_I(0, 1.0, bad), std::invalid_argument);
  bad = ContourSpec{};
  bad.nodes_per_segment = 0;
  CHECK_THROWS_AS(lsi::integral_I(0, 1.0, bad), std::invalid_argument);
}

TEST_CASE("dualized plain entry reproduces its closed-contour constant") {
  DualizationTask task = base_task(0.8, 0.3);
  const double nu = task.x + task.xi_sum;

  // at t = 1, r = 0 the point value collapses onto the constant itself
  const QuadResult g = lsi::dualize_pointwise(task, 1.0, 0.0, PairEntry::G);
  const cplx expected = std::pow(2.0, -nu) * task.g0 * ip0_closed(nu);
  CHECK(rel(g.value, expected) < 1e-9);
  CHECK(std::abs(g.value) > 0.1);

  // a heavier mass rescales the constant by M^(nu-1)
  DualizationTask heavy = task;
  heavy.mass = 2.0;
  const QuadResult g2 = lsi::dualize_pointwise(heavy, 1.0, 0.0, PairEntry::G);
  const cplx expected2 = std::pow(2.0, -nu) * std::pow(2.0, nu - 1.0) * task.g0 * ip0_closed(nu);
  CHECK(rel(g2.value, expected2) < 1e-9);
}

TEST_CASE("dualized log entry matches the two-term closed form") {
  DualizationTask task = base_task(0.8, 0.3);
  const double nu = task.x + task.xi_sum;
  const double lm = 1.0 + task.log_mix;

  const QuadResult h = lsi::dualize_pointwise(task, 1.0, 0.0, PairEntry::H);
  const cplx expected =
      std::pow(2.0, -nu) *
      (task.h0 * ip0_closed(nu) - lm * task.g0 * (ip1_closed(nu) + std::log(2.0) * ip0_closed(nu)));
  CHECK(rel(h.value, expected) < 1e-9);
}

TEST_CASE("dualized pair obeys causality and Gaussian factorization") {
  DualizationTask task = base_task(0.8, 0.3);

  // forward values are O(1); the backward value sits at the truncation floor
  const cplx g_fwd = lsi::dualize_pointwise(task, 1.0, 1.0, PairEntry::G).value;
  const cplx g_bwd = lsi::dualize_pointwise(task, -1.0, 1.0, PairEntry::G).value;
  CHECK(std::abs(g_bwd) < 1e-6 * std::abs(g_fwd));
  CHECK(std::abs(g_bwd) < 1e-10);

  // the spatial profile divides out as exp(-M r^2 / (2 t))
  const auto envelope = [&task](double t, double r) {
    return std::pow(t, -task.x) * std::exp(-task.mass * r * r / (2.0 * t));
  };
  const cplx rho_a = lsi::dualize_pointwise(task, 2.0, 1.0, PairEntry::G).value / envelope(2.0, 1.0);
  const cplx rho_b = lsi::dualize_pointwise(task, 1.0, 0.5, PairEntry::G).value / envelope(1.0, 0.5);
  CHECK(rel(rho_a, rho_b) < 1e-6);

  CHECK_THROWS_AS(lsi::dualize_pointwise(task, 0.0, 1.0, PairEntry::G), std::domain_error);
  DualizationTask bad = task;
  bad.x = -1.0;
  CHECK_THROWS_AS(lsi::dualize_pointwise(bad, 1.0, 0.0, PairEntry::G), std::domain_error);
  bad = task;
  bad.xi_sum = -task.x;
  CHECK_THROWS_AS(lsi::dualize_pointwise(bad, 1.0, 0.0, PairEntry::G), std::domain_error);
  bad = task;
  bad.mass = 0.0;
  CHECK_THROWS_AS(lsi::dualize_pointwise(bad, 1.0, 0.0, PairEntry::G), std::domain_error);
}

TEST_CASE("causality report aggregates the grid diagnostics") {
  for (auto [x, xi] : {std::pair{0.8, 0.3}, std::pair{1.5, 0.0}, std::pair{0.5, 1.0}}) {
    const DualizationTask task = base_task(x, xi);
    const CausalityReport rep = lsi::causality_report(task);

    CHECK(rep.points.size() == task.grid.size());
    CHECK(rep.trusted_points == static_cast<int>(task.grid.size()));
    CHECK(rep.skipped_points == 0);

    CHECK(rep.suppression_ratio < 1e-10);
    CHECK(rep.gaussian_spread < 1e-10);
    CHECK(rep.g0_relative_gap < 1e-9);
    CHECK(rel(rep.g0_identity, std::pow(2.0, -(x + xi)) * task.g0 * ip0_closed(x + xi)) < 1e-9);

    // the rescaled log entry is exactly linear in log t with slope -G0
    CHECK(std::abs(rep.h_log_slope + rep.g0_quadrature) < 1e-9 * std::abs(rep.g0_quadrature));
    CHECK(rep.slope_gap < 1e-9);
  }
}

TEST_CASE("asymmetric log admixture has a vanishing log-slope") {
  DualizationTask task = base_task(0.8, 0.3);
  task.asymmetric = true;
  task.log_mix = 0.6;
  const CausalityReport rep = lsi::causality_report(task);
  CHECK(std::abs(rep.h_log_slope) < 1e-9 * std::abs(rep.g0_quadrature));
  CHECK(rep.slope_gap < 1e-9);
}

TEST_CASE("report drops points that fail the error requirement") {
  DualizationTask task = base_task(0.8, 0.3);
  ContourSpec sloppy;
  sloppy.tail_depth = 6.0;  // truncation remainder far above tolerance/10
  CHECK_THROWS_AS(lsi::causality_report(task, sloppy), std::domain_error);
}

TEST_CASE("report rejects degenerate grids") {
  DualizationTask task = base_task(0.8, 0.3);
  task.grid.clear();
  CHECK_THROWS_AS(lsi::causality_report(task), std::domain_error);
  task.grid = {{1.0, 0.0}, {2.0, 0.5}};
  CHECK_THROWS_AS(lsi::causality_report(task), std::domain_error);
}

TEST_CASE("perturbed exponents leave a visible residual") {
  // comparisons must have teeth: shifting the exponent breaks the identity
  const QuadResult q = lsi::integral_I(0, 1.5, spec_of(HalfPlane::above));
  CHECK(rel(q.value, ip0_closed(1.6)) > 1e-2);

  // a wrong scaling exponent in the envelope breaks the plateau
  DualizationTask task = base_task(0.8, 0.3);
  const cplx rho_1 = lsi::dualize_pointwise(task, 0.5, 0.0, PairEntry::G).value *
                     std::pow(0.5, task.x + 0.05);
  const cplx rho_2 = lsi::dualize_pointwise(task, 4.0, 0.0, PairEntry::G).value *
                     std::pow(4.0, task.x + 0.05);
  CHECK(std::abs(rho_1 - rho_2) / std::abs(rho_2) > 1e-2);
}

TEST_CASE("truncation error estimate shrinks monotonically with tail depth") {
  // With the panel count pinned, the reported error is dominated by the
  // discarded-tail bound, which must decay as the rays are followed deeper.
  for (const HalfPlane hp : {HalfPlane::above, HalfPlane::below}) {
    ContourSpec spec = spec_of(hp);
    double prev = std::numeric_limits<double>::infinity();
    for (const double depth : {12.0, 17.0, 22.0}) {
      spec.tail_depth = depth;
      const double err = lsi::integral_I(0, 1.0, spec).error;
      CHECK(err < prev);
      prev = err;
    }
  }
}
