#include "wavefront/roots.hpp"

#include <algorithm>

namespace wavefront::roots {

Bracket bisect_bracket(const ScalarFn& f, Bracket b, double tol, int max_iter) {
  for (int it = 0; it < max_iter; ++it) {
    if (b.f_lo == 0.0) return {b.lo, b.lo, 0.0, 0.0};
    if (b.f_hi == 0.0) return {b.hi, b.hi, 0.0, 0.0};
    if (std::abs(b.hi - b.lo) <= tol) break;
    const double mid = 0.5 * (b.lo + b.hi);
    if (mid <= std::min(b.lo, b.hi) || mid >= std::max(b.lo, b.hi)) break;
    const double fm = f(mid);
    if ((fm < 0.0) == (b.f_lo < 0.0) && fm != 0.0) {
      b.lo = mid;
      b.f_lo = fm;
    } else {
      b.hi = mid;
      b.f_hi = fm;
    }
  }
  return b;
}

double bisect(const ScalarFn& f, double lo, double hi, double tol, int max_iter) {
  const Bracket b = bisect_bracket(f, {lo, hi, f(lo), f(hi)}, tol, max_iter);
  return 0.5 * (b.lo + b.hi);
}

std::vector<std::pair<double, double>> scan_sign_changes(const ScalarFn& f, double a, double b, int n,
                                                         bool skip_endpoints) {
  std::vector<std::pair<double, double>> out;
  if (n < 2) return out;
  const int first = skip_endpoints ? 1 : 0;
  const int last = skip_endpoints ? n - 2 : n - 1;
  const double h = (b - a) / (n - 1);
  double x_prev = a + first * h;
  double f_prev = f(x_prev);
  if (f_prev == 0.0) out.emplace_back(x_prev, x_prev);
  for (int i = first + 1; i <= last; ++i) {
    const double x = (i == n - 1) ? b : a + i * h;
    const double fx = f(x);
    if (fx == 0.0) {
      out.emplace_back(x, x);
    } else if (f_prev != 0.0 && (fx < 0.0) != (f_prev < 0.0)) {
      out.emplace_back(x_prev, x);
    }
    x_prev = x;
    f_prev = fx;
  }
  return out;
}

std::optional<double> invert_increasing(const ScalarFn& f, double target, double lo, double hi,
                                        const ScalarFn* df, double tol) {
  const double flo = f(lo) - target;
  const double fhi = f(hi) - target;
  if (flo > 0.0 || fhi < 0.0) return std::nullopt;
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  auto shifted = [&](double x) { return f(x) - target; };
  Bracket b = bisect_bracket(shifted, {lo, hi, flo, fhi}, tol);
  double x = 0.5 * (b.lo + b.hi);
  if (df != nullptr) {
    // A couple of Newton steps, kept only while they stay inside the bracket.
    for (int k = 0; k < 3; ++k) {
      const double d = (*df)(x);
      if (!(std::abs(d) > 0.0)) break;
      const double next = x - shifted(x) / d;
      if (!(next >= b.lo && next <= b.hi)) break;
      x = next;
    }
  }
  return x;
}

}  // namespace wavefront::roots
