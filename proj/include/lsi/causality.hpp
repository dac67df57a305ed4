#pragma once

#include "lsi/quadrature.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace lsi {

// Which side of the branch cut the integration line passes.
enum class HalfPlane { above, below };

// Contour layout for the oscillatory line integrals.  The line Re zeta in
// [-L, L] is deformed into the decaying half-plane: for `below` a staple with
// two vertical rays of depth `tail_depth` plus the horizontal segment at
// -i*epsilon; for `above` a cut-wrapping contour (rotated upper lip, unit
// semicircle around the branch point, real segment, decaying down-ray).
struct ContourSpec {
  double epsilon = 0.25;     // offset of the horizontal segment below the axis
  double L = 40.0;           // truncation half-width of the line
  double tail_depth = 34.0;  // depth of the decaying vertical rays (in units of 1/frequency)
  int nodes_per_segment = 8; // initial panels per contour segment
  HalfPlane half_plane = HalfPlane::below;

  void validate() const;  // throws std::invalid_argument on a malformed spec
};

// integral of exp(-i*zeta) * zeta^(-x) * log(zeta)^n along the line
// Re zeta +/- i*epsilon, with the branch cut of zeta^(-x) log(zeta)^n on the
// negative real axis.  n must be 0 or 1; x must be positive (std::domain_error
// otherwise).  The returned error field carries the quadrature estimate plus
// the tail-truncation bound.
QuadResult integral_I(int n, double x, const ContourSpec& spec = {});

// Entry of the logarithmic pair to dualize: the plain two-point function or
// its logarithmic partner.
enum class PairEntry { G, H };

// Inputs of a pointwise mass-space reconstruction
//   |t|^(-x) * Integral dzeta exp(-i*M*zeta) ghat((2*zeta*t + i*r^2)/|t|)
// where ghat carries exponent nu = x + xi_sum and, for the H entry, the
// logarithmic admixture controlled by log_mix.
struct DualizationTask {
  double x = 1.0;        // scaling exponent, > 0
  double xi_sum = 0.0;   // sum of the second exponents; x + xi_sum > 0
  double log_mix = 0.0;  // log coefficient of the H integrand (xi'_1 + xi'_2,
                         // or xi'_1 alone for an asymmetric task)
  bool asymmetric = false;  // true: the log t terms of the H integrand cancel
  double mass = 1.0;        // M > 0
  double g0 = 1.0;          // amplitude of the power part
  double h0 = 1.0;          // amplitude of the pure-power piece of H
  std::vector<std::pair<double, double>> grid;  // (t, r) sample points, t != 0
  double tolerance = 1e-6;  // aggregate tolerance; points need error < tolerance/10

  void validate() const;  // throws std::domain_error / std::invalid_argument
  static std::vector<std::pair<double, double>> default_grid();
};

// Single-point dualization of one entry at (t, r).  Throws std::domain_error
// for t == 0.  For t > 0 the contour wraps the branch cut
// {Im zeta = -r^2/(2t), Re zeta <= 0}; for t < 0 the integrand is analytic in
// the decaying half-plane and a staple contour is used, so the value is
// suppressed to the truncation level.
QuadResult dualize_pointwise(const DualizationTask& task, double t, double r, PairEntry entry,
                             const ContourSpec& spec = {});

// One evaluated grid point of a causality report.
struct GridPoint {
  double t = 0.0;
  double r = 0.0;
  std::complex<double> g;  // dualized plain entry
  std::complex<double> h;  // dualized logarithmic entry
  double g_error = 0.0;
  double h_error = 0.0;
  bool trusted = false;  // both errors below tolerance/10
};

// Aggregated dualization diagnostics over a (t, r) grid.
struct CausalityReport {
  std::vector<GridPoint> points;

  // max |G| over t<0 divided by max |G| over t>0 (trusted points only).
  double suppression_ratio = 0.0;
  // relative spread of G(t,r) / (t^(-x) exp(-M r^2 / (2 t))) over t>0.
  double gaussian_spread = 0.0;
  // the measured constant of that ratio, and its closed-contour counterpart
  // 2^(-nu) M^(nu-1) g0 * integral_I(0, nu, above).
  std::complex<double> g0_quadrature;
  std::complex<double> g0_identity;
  double g0_relative_gap = 0.0;
  // least-squares slope of H * t^x * exp(+M r^2/(2t)) against log t (t > 0).
  std::complex<double> h_log_slope;
  // |slope + G0|/|G0| for a symmetric task, |slope|/|G0| for an asymmetric one.
  double slope_gap = 0.0;

  int trusted_points = 0;
  int skipped_points = 0;
};

// Evaluates both entries on the task grid and aggregates the causality
// diagnostics.  Only points whose error estimate is below tolerance/10 enter
// the aggregates.  Throws std::domain_error if the grid is empty or one sign
// of t is missing.
CausalityReport causality_report(const DualizationTask& task, const ContourSpec& spec = {});

}  // namespace lsi
