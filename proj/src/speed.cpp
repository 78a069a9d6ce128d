#include "wavefront/speed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "wavefront/csv.hpp"
#include "wavefront/errors.hpp"
#include "wavefront/quadrature.hpp"

namespace wavefront {

namespace {

struct Jump {
  double phi_l, phi_r, z_l, z_r, value;
};

Jump evaluate(const AdmissibleSet& adm, double c, double phi_l, const ZOptions& zo) {
  const ModelSpec& m = adm.model();
  const double phi_r = adm.eta(phi_l);
  const double z_r = phi_r >= 1.0 ? 0.0 : z_value(m, Branch::Upper, c, phi_r, zo);
  const double z_l = phi_l <= 0.0 ? 0.0 : z_value(m, Branch::Lower, c, phi_l, zo);
  return {phi_l, phi_r, z_l, z_r, z_r - z_l + c * (phi_r - phi_l)};
}

}  // namespace

double F(const AdmissibleSet& adm, double c, double phi_l, const ZOptions& zopts) {
  return evaluate(adm, c, phi_l, zopts).value;
}

SpeedResult solve_speed(const AdmissibleSet& adm, double phi_l, const SpeedOptions& opts) {
  if (!adm.contains(phi_l)) throw DomainError("phi_l=" + std::to_string(phi_l) + " outside the admissible set");
  auto Fc = [&](double c) { return evaluate(adm, c, phi_l, opts.z).value; };

  double lo = 0.0, hi = 0.0;
  const double f0 = Fc(0.0);
  if (f0 == 0.0) {
    lo = hi = 0.0;
  } else {
    // F increases in c: search downward when F(0) > 0, upward otherwise.
    const double dir = f0 > 0.0 ? -1.0 : 1.0;
    double prev = 0.0;
    double step = 1.0;
    bool found = false;
    while (true) {
      const double c = dir * std::min(step, opts.c_max);
      const double fc = Fc(c);
      if ((f0 > 0.0 && fc <= 0.0) || (f0 < 0.0 && fc >= 0.0)) {
        lo = std::min(prev, c);
        hi = std::max(prev, c);
        found = true;
        break;
      }
      if (step >= opts.c_max) break;
      prev = c;
      step *= 2.0;
    }
    if (!found) {
      throw BracketFailure("no sign change of F within |c| <= " + std::to_string(opts.c_max) +
                           " at phi_l=" + std::to_string(phi_l));
    }
    double f_lo = Fc(lo);
    while (hi - lo > opts.tol_c) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double fm = Fc(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0.0) == (f_lo < 0.0)) {
        lo = mid;
        f_lo = fm;
      } else {
        hi = mid;
      }
    }
  }

  SpeedResult r;
  r.c_star = 0.5 * (lo + hi);
  r.bracket = {lo, hi};
  const Jump j = evaluate(adm, r.c_star, phi_l, opts.z);
  r.phi_l = j.phi_l;
  r.phi_r = j.phi_r;
  r.z_l = j.z_l;
  r.z_r = j.z_r;
  r.F_residual = std::abs(j.value);
  r.consistency_defect = std::abs(r.c_star + (j.z_r - j.z_l) / (j.phi_r - j.phi_l));
  r.trusted = r.F_residual <= 1e-7 * (1.0 + std::abs(r.c_star));
  return r;
}

std::vector<double> sweep_grid(const AdmissibleSet& adm, int n) {
  if (n < 2) throw DomainError("sweep needs at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(n));
  const double a = adm.I_lo(), b = adm.I_hi();
  for (int i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  grid.back() = b;
  return grid;
}

namespace {

SweepRow sweep_row(const AdmissibleSet& adm, double phi_l, const SpeedOptions& opts) {
  SweepRow row;
  row.phi_l = phi_l;
  try {
    row.result = solve_speed(adm, phi_l, opts);
  } catch (const BracketFailure& e) {
    row.error = e.what();
    row.bracket_failure = true;
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<SweepRow> sweep(const AdmissibleSet& adm, int n, const SpeedOptions& opts, Execution exec) {
  const std::vector<double> grid = sweep_grid(adm, n);
  std::vector<SweepRow> rows(grid.size());
  const long count = static_cast<long>(grid.size());
  if (exec == Execution::Serial) {
    for (long i = 0; i < count; ++i) rows[i] = sweep_row(adm, grid[i], opts);
  } else {
#pragma omp parallel for schedule(dynamic) num_threads(max_threads())
    for (long i = 0; i < count; ++i) rows[i] = sweep_row(adm, grid[i], opts);
  }
  return rows;
}

std::optional<std::size_t> first_monotonicity_violation(const std::vector<SweepRow>& rows, double tie_tol) {
  std::optional<double> prev;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].result) continue;
    const double c = rows[i].result->c_star;
    if (prev && c >= *prev - tie_tol) return i;
    prev = c;
  }
  return std::nullopt;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  csv::Writer w(os, {"phi_l", "phi_r", "c_star", "z_l", "z_r", "F_residual"});
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const SweepRow& row : rows) {
    if (row.result) {
      const SpeedResult& r = *row.result;
      w.row({r.phi_l, r.phi_r, r.c_star, r.z_l, r.z_r, r.F_residual});
    } else {
      w.row({row.phi_l, nan, nan, nan, nan, nan});
    }
  }
}

double averaged_upper(const ModelSpec& m, double phi, double rel_tol) {
  const double beta = m.beta();
  const double w = phi - beta;
  if (w <= 0.0) return m.g(beta) * m.dD(beta);
  // s = beta + t^2 turns g D / (s - beta) ds into 2 g D / t dt.
  auto f = [&](double t) {
    const double s = beta + t * t;
    return 2.0 * m.g(s) * m.D(s) / t;
  };
  return quad::integrate(f, 0.0, std::sqrt(w), rel_tol) / w;
}

double averaged_lower(const ModelSpec& m, double phi, double rel_tol) {
  const double alpha = m.alpha();
  const double w = alpha - phi;
  if (w <= 0.0) return m.g(alpha) * m.dD(alpha);
  auto f = [&](double t) {
    const double s = alpha - t * t;
    return -2.0 * m.g(s) * m.D(s) / t;
  };
  return quad::integrate(f, 0.0, std::sqrt(w), rel_tol) / w;
}

namespace {

struct SupResult {
  double value;
  double arg;
};

template <class A>
void fill(std::vector<double>& out, const std::vector<double>& x, A&& avg, Execution exec) {
  const long n = static_cast<long>(x.size());
  out.resize(x.size());
  if (exec == Execution::Serial) {
    for (long i = 0; i < n; ++i) out[i] = avg(x[i]);
  } else {
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (long i = 0; i < n; ++i) out[i] = avg(x[i]);
  }
}

// Sup of avg over (a, b], starting from the limit value at `a`, on a uniform
// grid refined around the coarse argmax.
template <class A>
SupResult grid_sup(double a, double b, double limit_at_a, A&& avg, const BoundsOptions& o) {
  const int n = std::max(o.grid, 2);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = a + (b - a) * (i + 1) / n;
  std::vector<double> v;
  fill(v, x, avg, o.exec);

  SupResult best{limit_at_a, a};
  std::size_t k = 0;
  bool interior = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > best.value) {
      best = {v[i], x[i]};
      k = i;
      interior = true;
    }
  }
  const double h = (b - a) / n;
  const double lo = interior ? std::max(a, x[k] - h) : a;
  const double hi = interior ? std::min(b, x[k] + h) : std::min(b, a + h);
  const int m = 2 * std::max(o.refine, 1);
  std::vector<double> xr;
  for (int i = 1; i < m; ++i) xr.push_back(lo + (hi - lo) * i / m);
  std::vector<double> vr;
  fill(vr, xr, avg, o.exec);
  for (std::size_t i = 0; i < vr.size(); ++i) {
    if (vr[i] > best.value) best = {vr[i], xr[i]};
  }
  return best;
}

}  // namespace

SpeedBounds speed_bounds(const ModelSpec& m, const BoundsOptions& opts) {
  const double tol = default_eq_tol(m);
  const double P0 = m.P(0.0), P1 = m.P(1.0);
  const double Pa = m.P(m.alpha()), Pb = m.P(m.beta());
  if (Pb < P0 - tol || Pa > P1 + tol) {
    throw PreconditionError("speed bounds need P(beta) >= P(0) and P(alpha) <= P(1); got P(beta)-P(0)=" +
                            std::to_string(Pb - P0) + ", P(alpha)-P(1)=" + std::to_string(Pa - P1));
  }
  const double beta = m.beta(), alpha = m.alpha();
  const SupResult up = grid_sup(
      beta, 1.0, m.g(beta) * m.dD(beta), [&](double phi) { return averaged_upper(m, phi, opts.rel_tol); }, opts);
  // Mirror with distance to alpha as the grid variable.
  const SupResult lo = grid_sup(
      0.0, alpha, m.g(alpha) * m.dD(alpha), [&](double d) { return averaged_lower(m, alpha - d, opts.rel_tol); },
      opts);

  SpeedBounds sb;
  sb.sup_upper_integral = up.value;
  sb.sup_lower_integral = lo.value;
  sb.argmax_upper = up.arg;
  sb.argmax_lower = alpha - lo.arg;
  sb.c_plus = 2.0 * std::sqrt(std::max(up.value, 0.0));
  sb.c_minus = -2.0 * std::sqrt(std::max(lo.value, 0.0));
  return sb;
}

}  // namespace wavefront
