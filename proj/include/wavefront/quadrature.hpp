#pragma once

#include <functional>

namespace wavefront::quad {

/// Adaptive 15-point Gauss-Kronrod on [a, b]; `rel_tol` is relative to the
/// magnitude of the result. Endpoints are never evaluated: integrable endpoint
/// singularities give a finite value, but full accuracy needs a substitution.
double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-12,
                 double* error_estimate = nullptr);

}  // namespace wavefront::quad
