#include "lsi/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

namespace lsi {

QuadResult integrate_complex(const std::function<std::complex<double>(double)>& f, double a,
                             double b, int panels, double tol) {
  if (panels < 1) throw std::invalid_argument("integrate_complex: panels must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_complex: tolerance must be positive");

  using gk = boost::math::quadrature::gauss_kronrod<double, 15>;
  QuadResult out;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double hi = (p + 1 == panels) ? b : a + (p + 1) * h;
    double err_re = 0.0, err_im = 0.0;
    const double re = gk::integrate([&f](double s) { return f(s).real(); }, lo, hi, 12, tol, &err_re);
    const double im = gk::integrate([&f](double s) { return f(s).imag(); }, lo, hi, 12, tol, &err_im);
    out.value += std::complex<double>(re, im);
    out.error += std::hypot(err_re, err_im);
  }
  return out;
}

}  // namespace lsi
