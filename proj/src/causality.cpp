#include "lsi/causality.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace lsi {
namespace {

using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};
constexpr double PI = std::numbers::pi;

// Integrand family (c0 + c1 * log(scale*w)) * (scale*w)^(-nu) with the branch
// cut of the principal logarithm on the negative real w-axis.
struct LogPow {
  double nu = 1.0;
  double scale = 1.0;
  cplx c0{1.0, 0.0};
  cplx c1{0.0, 0.0};

  // principal-branch evaluation, valid away from the cut
  cplx principal(cplx w) const {
    const cplx lg = std::log(scale * w);
    return (c0 + c1 * lg) * std::exp(-nu * lg);
  }
  // continuation onto the upper lip of the cut, w = -s with s continued into
  // the upper-right s-quadrant: log(scale*w) -> log(scale*s) + i*pi
  cplx upper_lip(cplx s) const {
    const cplx lg = std::log(scale * s) + I * PI;
    return (c0 + c1 * lg) * std::exp(-nu * lg);
  }
  // on the unit circle w = exp(i*theta), theta in [0, pi]
  cplx arc(double theta) const {
    const cplx lg = cplx(std::log(scale), theta);
    return (c0 + c1 * lg) * std::exp(-nu * lg);
  }
};

cplx osc(double M, cplx zeta) { return std::exp(-I * M * zeta); }

// integral over the line Im w = +beta (passing above the cut of F) of
// exp(-i*M*(w - i*beta)) * F(w), deformed onto the cut-wrapping contour:
//   A  rotated upper lip   w = -(1 + i*sigma)
//   B  unit semicircle     w = exp(i*theta), theta from pi to 0
//   C  real segment        w = s in [1, L]
//   D  decaying down-ray   w = L - i*sigma
// The identity is exact; truncating the A/D rays at tail_depth/M leaves a
// remainder of order exp(-tail_depth) that is added to the error estimate.
QuadResult wrap_above(const LogPow& F, double M, double beta, const ContourSpec& spec) {
  const double T = spec.tail_depth / M;
  const int panels = spec.nodes_per_segment;

  const auto zeta_of = [beta](cplx w) { return w - I * beta; };

  const auto fA = [&](double sigma) {
    const cplx s{1.0, sigma};
    return I * osc(M, zeta_of(-s)) * F.upper_lip(s);
  };
  const auto fB = [&](double theta) {
    const cplx w = std::polar(1.0, theta);
    return -I * osc(M, zeta_of(w)) * w * F.arc(theta);
  };
  const auto fC = [&](double s) { return osc(M, zeta_of(cplx(s, 0.0))) * F.principal(s); };
  const auto fD = [&](double sigma) {
    const cplx w{spec.L, -sigma};
    return -I * osc(M, zeta_of(w)) * F.principal(w);
  };

  QuadResult out;
  out += integrate_complex(fA, 0.0, T, panels);
  out += integrate_complex(fB, 0.0, PI, panels);
  out += integrate_complex(fC, 1.0, spec.L, panels);
  out += integrate_complex(fD, 0.0, T, panels);
  out.error += (std::abs(fA(T)) + std::abs(fD(T))) / M;  // truncated ray tails
  return out;
}

// integral over the line Re zeta in [-L, L] shifted to -i*epsilon, with the
// two decaying vertical rays at Re zeta = -L and +L (depth tail_depth/M).
// Valid when the integrand f is analytic below the real axis and decays like
// exp(-M |Im zeta|) going down.
QuadResult staple_below(const std::function<cplx(cplx)>& f, double M, const ContourSpec& spec) {
  const double T = spec.tail_depth / M;
  const int panels = spec.nodes_per_segment;

  const auto up = [&](double sigma) { return I * f(cplx(-spec.L, -sigma)); };
  const auto hor = [&](double s) { return f(cplx(s, -spec.epsilon)); };
  const auto down = [&](double sigma) { return -I * f(cplx(spec.L, -sigma)); };

  QuadResult out;
  out += integrate_complex(up, spec.epsilon, T, panels);
  out += integrate_complex(hor, -spec.L, spec.L, panels);
  out += integrate_complex(down, spec.epsilon, T, panels);
  out.error += (std::abs(f(cplx(-spec.L, -T))) + std::abs(f(cplx(spec.L, -T)))) / M;
  return out;
}

// coefficient pair of the dualization integrand for one entry at fixed t
LogPow entry_integrand(const DualizationTask& task, double t, PairEntry entry) {
  const double nu = task.x + task.xi_sum;
  LogPow F;
  F.nu = nu;
  F.scale = 2.0;
  if (entry == PairEntry::G) {
    F.c0 = task.g0;
    F.c1 = 0.0;
  } else if (task.asymmetric) {
    F.c0 = task.h0;
    F.c1 = -task.log_mix * task.g0;
  } else {
    F.c0 = task.h0 - task.g0 * std::log(std::abs(t));
    F.c1 = -(1.0 + task.log_mix) * task.g0;
  }
  return F;
}

}  // namespace

void ContourSpec::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("ContourSpec: epsilon must lie in (0, 1)");
  if (!(L > 10.0)) throw std::invalid_argument("ContourSpec: L must exceed 10");
  if (!(tail_depth > 0.0)) throw std::invalid_argument("ContourSpec: tail_depth must be positive");
  if (nodes_per_segment < 1)
    throw std::invalid_argument("ContourSpec: nodes_per_segment must be >= 1");
}

QuadResult integral_I(int n, double x, const ContourSpec& spec) {
  spec.validate();
  if (n != 0 && n != 1) throw std::invalid_argument("integral_I: n must be 0 or 1");
  if (!(x > 0.0)) throw std::domain_error("integral_I: x must be positive");

  if (spec.half_plane == HalfPlane::above) {
    LogPow F;
    F.nu = x;
    F.scale = 1.0;
    F.c0 = (n == 0) ? 1.0 : 0.0;
    F.c1 = (n == 1) ? 1.0 : 0.0;
    return wrap_above(F, 1.0, 0.0, spec);
  }

  const auto f = [n, x](cplx zeta) {
    const cplx lg = std::log(zeta);
    cplx v = std::exp(-I * zeta - x * lg);
    if (n == 1) v *= lg;
    return v;
  };
  return staple_below(f, 1.0, spec);
}

void DualizationTask::validate() const {
  if (!(x > 0.0)) throw std::domain_error("DualizationTask: x must be positive");
  if (!(x + xi_sum > 0.0))
    throw std::domain_error("DualizationTask: x + xi_sum must be positive");
  if (!(mass > 0.0)) throw std::domain_error("DualizationTask: mass must be positive");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("DualizationTask: tolerance must be positive");
}

std::vector<std::pair<double, double>> DualizationTask::default_grid() {
  std::vector<std::pair<double, double>> g;
  for (double t : {-4.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 4.0})
    for (double r : {0.0, 0.5, 1.0, 2.0}) g.emplace_back(t, r);
  return g;
}

QuadResult dualize_pointwise(const DualizationTask& task, double t, double r, PairEntry entry,
                             const ContourSpec& spec) {
  task.validate();
  spec.validate();
  if (t == 0.0) throw std::domain_error("dualize_pointwise: t must be nonzero");

  const double at = std::abs(t);
  const double beta = r * r / (2.0 * at);
  const double nu = task.x + task.xi_sum;
  const LogPow F = entry_integrand(task, t, entry);

  QuadResult q;
  if (t > 0.0) {
    // branch cut {Im zeta = -beta, Re zeta <= 0}: wrap it
    q = wrap_above(F, task.mass, beta, spec);
  } else {
    // branch point at +i*beta with the cut to the upper right: the integrand
    // is analytic below the axis, so the staple yields the suppressed value
    const auto f = [&](cplx zeta) {
      const cplx v = -2.0 * (zeta - I * beta);
      const cplx lg = std::log(v);
      return osc(task.mass, zeta) * (F.c0 + F.c1 * lg) * std::exp(-nu * lg);
    };
    q = staple_below(f, task.mass, spec);
  }
  return cplx(std::pow(at, -task.x), 0.0) * q;
}

CausalityReport causality_report(const DualizationTask& task, const ContourSpec& spec) {
  task.validate();
  spec.validate();
  if (task.grid.empty()) throw std::domain_error("causality_report: empty grid");
  const bool has_pos = std::any_of(task.grid.begin(), task.grid.end(),
                                   [](const auto& p) { return p.first > 0.0; });
  const bool has_neg = std::any_of(task.grid.begin(), task.grid.end(),
                                   [](const auto& p) { return p.first < 0.0; });
  if (!has_pos || !has_neg)
    throw std::domain_error("causality_report: grid must cover both signs of t");

  CausalityReport rep;
  const double trust = task.tolerance / 10.0;
  for (const auto& [t, r] : task.grid) {
    const QuadResult g = dualize_pointwise(task, t, r, PairEntry::G, spec);
    const QuadResult h = dualize_pointwise(task, t, r, PairEntry::H, spec);
    GridPoint pt;
    pt.t = t;
    pt.r = r;
    pt.g = g.value;
    pt.h = h.value;
    pt.g_error = g.error;
    pt.h_error = h.error;
    pt.trusted = g.error < trust && h.error < trust;
    (pt.trusted ? rep.trusted_points : rep.skipped_points)++;
    rep.points.push_back(pt);
  }
  if (rep.trusted_points == 0)
    throw std::domain_error("causality_report: no grid point met the error requirement");

  // suppression: compare |G| across the two time orientations
  double max_neg = 0.0, max_pos = 0.0;
  for (const auto& pt : rep.points) {
    if (!pt.trusted) continue;
    (pt.t < 0.0 ? max_neg : max_pos) = std::max(pt.t < 0.0 ? max_neg : max_pos, std::abs(pt.g));
  }
  if (max_pos == 0.0)
    throw std::domain_error("causality_report: no trusted point with t > 0");
  rep.suppression_ratio = max_neg / max_pos;

  // Gaussian factorization: G divided by t^(-x) exp(-M r^2/(2t)) over t>0
  std::vector<cplx> ratios;
  std::vector<double> logts;
  std::vector<cplx> hvals;
  for (const auto& pt : rep.points) {
    if (!pt.trusted || pt.t <= 0.0) continue;
    const double envelope = std::pow(pt.t, -task.x) * std::exp(-task.mass * pt.r * pt.r / (2.0 * pt.t));
    ratios.push_back(pt.g / envelope);
    logts.push_back(std::log(pt.t));
    hvals.push_back(pt.h / envelope);
  }
  cplx mean{0.0, 0.0};
  for (const cplx& v : ratios) mean += v;
  mean /= static_cast<double>(ratios.size());
  double spread = 0.0;
  for (const cplx& v : ratios) spread = std::max(spread, std::abs(v - mean));
  rep.gaussian_spread = spread / std::abs(mean);
  rep.g0_quadrature = mean;

  ContourSpec above = spec;
  above.half_plane = HalfPlane::above;
  const double nu = task.x + task.xi_sum;
  rep.g0_identity = std::pow(2.0, -nu) * std::pow(task.mass, nu - 1.0) * task.g0 *
                    integral_I(0, nu, above).value;
  rep.g0_relative_gap = std::abs(rep.g0_quadrature - rep.g0_identity) / std::abs(rep.g0_identity);

  // log-slope of the rescaled H entry against log t (exact least squares)
  double lbar = 0.0;
  for (double l : logts) lbar += l;
  lbar /= static_cast<double>(logts.size());
  cplx ybar{0.0, 0.0};
  for (const cplx& y : hvals) ybar += y;
  ybar /= static_cast<double>(hvals.size());
  cplx num{0.0, 0.0};
  double den = 0.0;
  for (std::size_t i = 0; i < logts.size(); ++i) {
    num += (logts[i] - lbar) * (hvals[i] - ybar);
    den += (logts[i] - lbar) * (logts[i] - lbar);
  }
  if (den == 0.0)
    throw std::domain_error("causality_report: need at least two distinct positive times");
  rep.h_log_slope = num / den;

  const cplx expected = task.asymmetric ? cplx{0.0, 0.0} : -rep.g0_quadrature;
  rep.slope_gap = std::abs(rep.h_log_slope - expected) / std::abs(rep.g0_quadrature);
  return rep;
}

}  // namespace lsi
