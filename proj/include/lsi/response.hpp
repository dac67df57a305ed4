#pragma once

#include <utility>
#include <vector>

namespace lsi {

// Scaling function f_R(y) = f0 * y^(1 + a' - lambda_R/z) * (y - 1)^(-1-a') of
// the two-time autoresponse.  Vanishes identically for y < 1 (causality); at
// y == 1 a divergent power returns a signaled infinity rather than a silent
// finite value.
double response_shape(double y, double a_prime, double lambda_R, double z, double f0);

// Autoresponse R(t, s) = s^(-1-a) f_R(t/s) for waiting time s > 0
// (std::domain_error otherwise).
double response_scaling(double t, double s, double a, double a_prime, double lambda_R, double z,
                        double f0);

// Maximum deviation of s^(1+a) R(t, s) from f_R(t/s) over the sampled (t, s)
// pairs: the data-collapse residual of the scaling form.
double collapse_residual(const std::vector<std::pair<double, double>>& ts, double a,
                         double a_prime, double lambda_R, double z, double f0);

}  // namespace lsi
