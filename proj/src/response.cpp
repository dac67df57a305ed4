#include "lsi/response.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lsi {

double response_shape(double y, double a_prime, double lambda_R, double z, double f0) {
  if (y < 1.0) return 0.0;
  if (z == 0.0) throw std::domain_error("response_shape: z must be nonzero");
  const double power = 1.0 + a_prime - lambda_R / z;
  const double edge = -1.0 - a_prime;
  if (y == 1.0) {
    if (edge < 0.0) return std::numeric_limits<double>::infinity();
    if (edge == 0.0) return f0;
    return 0.0;
  }
  return f0 * std::pow(y, power) * std::pow(y - 1.0, edge);
}

double response_scaling(double t, double s, double a, double a_prime, double lambda_R, double z,
                        double f0) {
  if (!(s > 0.0)) throw std::domain_error("response_scaling: waiting time s must be positive");
  return std::pow(s, -1.0 - a) * response_shape(t / s, a_prime, lambda_R, z, f0);
}

double collapse_residual(const std::vector<std::pair<double, double>>& ts, double a,
                         double a_prime, double lambda_R, double z, double f0) {
  double worst = 0.0;
  for (const auto& [t, s] : ts) {
    const double rescaled = std::pow(s, 1.0 + a) * response_scaling(t, s, a, a_prime, lambda_R, z, f0);
    const double shape = response_shape(t / s, a_prime, lambda_R, z, f0);
    worst = std::max(worst, std::abs(rescaled - shape));
  }
  return worst;
}

}  // namespace lsi
