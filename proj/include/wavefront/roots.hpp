#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace wavefront::roots {

using ScalarFn = std::function<double(double)>;

/// Bisection on [lo, hi] where f(lo) and f(hi) have opposite signs (or one is zero).
/// Iterates until the bracket is no wider than `tol` or stops shrinking in
/// floating point; returns the midpoint of the final bracket.
double bisect(const ScalarFn& f, double lo, double hi, double tol = 1e-12, int max_iter = 400);

/// Bisection with the bracket endpoints reported back.
struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};
Bracket bisect_bracket(const ScalarFn& f, Bracket b, double tol, int max_iter = 400);

/// Brackets of sign changes of f on a uniform scan of `n` points in [a, b].
/// Scan nodes where f is exactly zero are reported as degenerate brackets
/// [x, x]. Endpoints a and b are excluded from sign-change bookkeeping when
/// `skip_endpoints` is set.
std::vector<std::pair<double, double>> scan_sign_changes(const ScalarFn& f, double a, double b, int n,
                                                         bool skip_endpoints = true);

/// Solves f(x) = target for x in [lo, hi] with f strictly increasing there,
/// bisection followed by Newton polish when a derivative is supplied.
/// Returns std::nullopt when target lies outside [f(lo), f(hi)].
std::optional<double> invert_increasing(const ScalarFn& f, double target, double lo, double hi,
                                        const ScalarFn* df = nullptr, double tol = 1e-15);

}  // namespace wavefront::roots
