#include "wavefront/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace wavefront::quad {

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 double* error_estimate) {
  if (a == b) {
    if (error_estimate != nullptr) *error_estimate = 0.0;
    return 0.0;
  }
  if (a > b) return -integrate(f, b, a, rel_tol, error_estimate);
  // Boost compares its error estimate, taken on the reference interval, with a
  // tolerance in the units of [a, b]; mapping onto [0, 1] keeps them consistent.
  const double w = b - a;
  auto unit = [&](double u) { return w * f(a + w * u); };
  double err = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(unit, 0.0, 1.0, 20, rel_tol, &err);
  if (error_estimate != nullptr) *error_estimate = err;
  return value;
}

}  // namespace wavefront::quad
