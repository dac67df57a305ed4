#pragma once

#include <complex>
#include <functional>

namespace lsi {

// Value and error estimate of a numerical integral.
struct QuadResult {
  std::complex<double> value{0.0, 0.0};
  double error = 0.0;

  QuadResult& operator+=(const QuadResult& o) {
    value += o.value;
    error += o.error;
    return *this;
  }
  friend QuadResult operator+(QuadResult a, const QuadResult& b) { return a += b; }
  friend QuadResult operator*(const std::complex<double>& c, QuadResult q) {
    q.value *= c;
    q.error *= std::abs(c);
    return q;
  }
};

// Adaptive Gauss-Kronrod (G7/K15) integration of a complex-valued function
// over the real interval [a, b], split into `panels` initial panels that are
// each refined adaptively. `tol` is the per-panel relative target.
QuadResult integrate_complex(const std::function<std::complex<double>(double)>& f, double a,
                             double b, int panels, double tol = 1e-12);

}  // namespace lsi
