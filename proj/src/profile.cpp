#include "wavefront/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "wavefront/csv.hpp"
#include "wavefront/errors.hpp"
#include "wavefront/quadrature.hpp"
#include "wavefront/roots.hpp"

namespace wavefront {

namespace {

constexpr double kPTol = 1e-8;
constexpr double kFluxTol = 1e-6;

// Distances to the equilibrium in [tail, s_max], uniform in q(s) = s + kappa ln s:
// logarithmic near the equilibrium, uniform in the bulk.
std::vector<double> graded_distances(double tail, double s_max, int n) {
  if (s_max <= 2.0 * tail || n < 2) return {s_max};
  const double kappa = 0.05 * s_max;
  roots::ScalarFn q = [kappa](double s) { return s + kappa * std::log(s); };
  roots::ScalarFn dq = [kappa](double s) { return 1.0 + kappa / s; };
  const double q0 = q(tail), q1 = q(s_max);
  std::vector<double> s(static_cast<std::size_t>(n));
  s.front() = tail;
  s.back() = s_max;
  for (int i = 1; i < n - 1; ++i) {
    const double target = q0 + (q1 - q0) * i / (n - 1);
    s[static_cast<std::size_t>(i)] = roots::invert_increasing(q, target, tail, s_max, &dq).value_or(tail);
  }
  return s;
}

// Integral of D / z over [a, b] split at the ODE nodes, where the
// interpolant of z is smooth.
double node_wise_integral(const ModelSpec& m, const ZSolution& zs, double a, double b, double rel_tol) {
  const double sign = a <= b ? 1.0 : -1.0;
  if (a > b) std::swap(a, b);
  auto f = [&](double phi) { return m.D(phi) / eval_z(zs, phi); };
  const auto& n = zs.nodes;
  auto it = std::upper_bound(n.begin(), n.end(), a, [](double v, const ZNode& x) { return v < x.phi; });
  double total = 0.0, left = a;
  for (; it != n.end() && it->phi < b; ++it) {
    total += quad::integrate(f, left, it->phi, rel_tol);
    left = it->phi;
  }
  total += quad::integrate(f, left, b, rel_tol);
  return sign * total;
}

struct Band {
  std::vector<ProfileSample> samples;
  bool saturated = false;
};

// Samples of one band. `phi_of(s)` maps distance to density, `jump_phi` is the
// side limit at the jump, `equilibrium` the far end.
template <class PhiOf>
Band build_band(const ModelSpec& m, const ZSolution& zs, double jump_phi, double equilibrium, PhiOf phi_of,
                double s_max, const ProfileOptions& o) {
  auto integrand = [&](double phi) { return m.D(phi) / eval_z(zs, phi); };
  const std::vector<double> s = graded_distances(o.tail_cut, s_max, o.samples_per_band);
  const std::size_t n = s.size();

  // Cumulative xi from the jump (largest distance) toward the equilibrium.
  std::vector<double> xi(n, 0.0), phi(n);
  for (std::size_t i = 0; i < n; ++i) phi[i] = phi_of(s[i]);
  phi[n - 1] = jump_phi;
  for (std::size_t k = n - 1; k-- > 0;) xi[k] = xi[k + 1] + node_wise_integral(m, zs, phi[k + 1], phi[k], o.quad_rel_tol);

  Band band;
  for (std::size_t i = 0; i < n; ++i) band.samples.push_back({xi[i], phi[i], eval_z(zs, phi[i])});
  band.samples.back().z = zs.z_at_inner;

  // Finite xi at the equilibrium iff |D/z| ~ dist^p with p > -1 near it.
  const double e = o.tail_cut;
  const double f1 = std::abs(integrand(phi_of(e))), f10 = std::abs(integrand(phi_of(10.0 * e)));
  if (n > 1 && f1 > 0.0 && f10 > 0.0) {
    const double p = std::log10(f10 / f1);
    if (p > -0.8) {
      band.saturated = true;
      const double x_end = xi[0] + node_wise_integral(m, zs, phi[0], equilibrium, o.quad_rel_tol);
      band.samples.insert(band.samples.begin(), {x_end, equilibrium, 0.0});
    }
  }
  return band;
}

}  // namespace

ShockProfile build_profile(const ModelSpec& m, const SpeedResult& sr, const ProfileOptions& o) {
  ShockProfile p;
  p.xi_s = o.xi_s;
  p.phi_l = sr.phi_l;
  p.phi_r = sr.phi_r;
  p.c = sr.c_star;

  std::optional<ZSolution> up, lo;
  if (p.phi_r < 1.0) {
    up = solve_upper(m, p.c, o.z, p.phi_r);
    p.z_r = up->z_at_inner;
  }
  if (p.phi_l > 0.0) {
    lo = solve_lower(m, p.c, o.z, p.phi_l);
    p.z_l = lo->z_at_inner;
  }

  if (o.check_consistency) {
    const double dP = std::abs(m.P(p.phi_r) - m.P(p.phi_l));
    const double dflux = std::abs((p.z_r + p.c * p.phi_r) - (p.z_l + p.c * p.phi_l));
    if (dP > kPTol || dflux > kFluxTol) {
      throw ConsistencyError("jump conditions fail at c=" + std::to_string(p.c) + ": |[P]|=" + std::to_string(dP) +
                             ", |[z + c phi]|=" + std::to_string(dflux));
    }
  }

  if (up) {
    // Upper band: xi runs from the far tail (phi near 1) up to xi_s at phi_r.
    Band b = build_band(m, *up, p.phi_r, 1.0, [](double s) { return 1.0 - s; }, 1.0 - p.phi_r, o);
    p.upper_samples = std::move(b.samples);
    p.saturation.reaches_1_at_finite_xi = b.saturated;
  } else {
    p.upper_constant = true;
    p.upper_samples = {{0.0, 1.0, 0.0}};
  }
  if (lo) {
    Band b = build_band(m, *lo, p.phi_l, 0.0, [](double s) { return s; }, p.phi_l, o);
    // Distances ascend toward the jump; xi must ascend away from it.
    std::reverse(b.samples.begin(), b.samples.end());
    p.lower_samples = std::move(b.samples);
    p.saturation.reaches_0_at_finite_xi = b.saturated;
  } else {
    p.lower_constant = true;
    p.lower_samples = {{0.0, 0.0, 0.0}};
  }

  for (auto& smp : p.upper_samples) smp.xi += p.xi_s;
  for (auto& smp : p.lower_samples) smp.xi += p.xi_s;
  return p;
}

namespace {

// Fornberg weights for derivatives 0..2 at z on the n nodes x.
void fd_weights(double z, const double* x, int n, double w[3][5]) {
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < n; ++j) w[k][j] = 0.0;
  w[0][0] = 1.0;
  double c1 = 1.0, c4 = x[0] - z;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, 2);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) w[k][i] = c1 * (k * w[k - 1][i - 1] - c5 * w[k][i - 1]) / c2;
        w[0][i] = -c1 * c5 * w[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k) w[k][j] = (c4 * w[k][j] - k * w[k - 1][j]) / c3;
      w[0][j] = c4 * w[0][j] / c3;
    }
    c1 = c2;
  }
}

struct BandDerivs {
  std::vector<std::size_t> idx;
  std::vector<double> dphi, d2P;
};

BandDerivs band_derivatives(const ModelSpec& m, const std::vector<ProfileSample>& s) {
  BandDerivs d;
  if (s.size() < 5) return d;
  for (std::size_t i = 2; i + 2 < s.size(); ++i) {
    double x[5], w[3][5];
    bool distinct = true;
    for (int k = 0; k < 5; ++k) x[k] = s[i - 2 + k].xi;
    for (int k = 1; k < 5; ++k) distinct = distinct && x[k] > x[k - 1];
    if (!distinct) continue;
    fd_weights(s[i].xi, x, 5, w);
    double dphi = 0.0, d2P = 0.0;
    for (int k = 0; k < 5; ++k) {
      dphi += w[1][k] * s[i - 2 + k].phi;
      d2P += w[2][k] * m.P(s[i - 2 + k].phi);
    }
    d.idx.push_back(i);
    d.dphi.push_back(dphi);
    d.d2P.push_back(d2P);
  }
  return d;
}

double band_residual(const ModelSpec& m, const std::vector<ProfileSample>& s, const BandDerivs& d, double c) {
  double scale = 0.0, worst = 0.0;
  for (std::size_t k = 0; k < d.idx.size(); ++k) {
    const double gv = m.g(s[d.idx[k]].phi);
    scale = std::max(scale, std::abs(d.d2P[k]) + std::abs(c * d.dphi[k]) + std::abs(gv));
    worst = std::max(worst, std::abs(d.d2P[k] + c * d.dphi[k] + gv));
  }
  return scale > 0.0 ? worst / scale : worst;
}

}  // namespace

std::vector<ProfileSample> ordered_samples(const ShockProfile& p) {
  std::vector<ProfileSample> out;
  const auto& first = p.increasing ? p.lower_samples : p.upper_samples;
  const auto& second = p.increasing ? p.upper_samples : p.lower_samples;
  out.insert(out.end(), first.begin(), first.end());
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

WeakReport verify_weak(const ModelSpec& m, const ShockProfile& p) {
  WeakReport r;
  try {
    const BandDerivs du = band_derivatives(m, p.upper_samples);
    const BandDerivs dl = band_derivatives(m, p.lower_samples);
    r.sup_residual_upper = band_residual(m, p.upper_samples, du, p.c);
    r.sup_residual_lower = band_residual(m, p.lower_samples, dl, p.c);
    r.sup_residual = std::max(r.sup_residual_upper, r.sup_residual_lower);
    r.residual_points = du.idx.size() + dl.idx.size();

    // 10 check points per band, spread over the interior stencils.
    auto redo = [&](const std::vector<ProfileSample>& s, const BandDerivs& d) {
      const std::size_t n = d.idx.size();
      if (n == 0) return;
      for (int k = 0; k < 10; ++k) {
        const std::size_t j = std::min(n - 1, static_cast<std::size_t>((k + 0.5) * n / 10.0));
        const ProfileSample& smp = s[d.idx[j]];
        r.redifferentiation_defect = std::max(r.redifferentiation_defect, std::abs(m.D(smp.phi) * d.dphi[j] - smp.z));
      }
    };
    redo(p.upper_samples, du);
    redo(p.lower_samples, dl);
  } catch (const std::exception&) {
    r.sup_residual = std::numeric_limits<double>::infinity();
  }

  r.jump_P_defect = std::abs(m.P(p.phi_r) - m.P(p.phi_l));
  r.jump_flux_defect = std::abs((p.z_r + p.c * p.phi_r) - (p.z_l + p.c * p.phi_l));

  const std::vector<ProfileSample> all = ordered_samples(p);
  const double dir = p.increasing ? 1.0 : -1.0;
  for (std::size_t i = 1; i < all.size(); ++i) {
    const bool xi_ok = all[i].xi >= all[i - 1].xi;
    const bool phi_ok = dir * (all[i].phi - all[i - 1].phi) > 0.0;
    if (!xi_ok || !phi_ok) ++r.monotonicity_violations;
  }
  return r;
}

WeakReport verify_step_front(const ModelSpec& m, const StepFront& front) {
  WeakReport r;
  for (double level : front.levels) r.sup_residual = std::max(r.sup_residual, std::abs(m.g(level)));
  for (std::size_t i = 1; i < front.levels.size(); ++i) {
    r.jump_P_defect = std::max(r.jump_P_defect, std::abs(m.P(front.levels[i - 1]) - m.P(front.levels[i])));
    if (!(front.levels[i] < front.levels[i - 1])) ++r.monotonicity_violations;
  }
  // z = 0 on constants and the speed is 0.
  r.jump_flux_defect = std::abs(front.speed) * (front.levels.empty() ? 0.0 : front.levels.front() - front.levels.back());
  return r;
}

CharacteristicReport characteristic_speeds(const ModelSpec& m, const ShockProfile& p) {
  CharacteristicReport rep;
  const double tol = 1e-12 * (1.0 + std::abs(p.c));
  const double orient = p.increasing ? -1.0 : 1.0;
  auto add = [&](const std::vector<ProfileSample>& s, bool upper) {
    for (const ProfileSample& smp : s) {
      if (smp.z == 0.0) continue;
      const double lambda = p.c + m.D(smp.phi) * m.g(smp.phi) / smp.z;
      rep.speeds.push_back({smp.phi, lambda, upper});
      const double d = orient * (lambda - p.c);
      if ((upper && d > tol) || (!upper && d < -tol)) rep.entropic = false;
    }
  };
  add(p.upper_samples, true);
  add(p.lower_samples, false);
  return rep;
}

ShockProfile reflect_profile(const ShockProfile& p) {
  ShockProfile q = p;
  q.xi_s = -p.xi_s;
  q.c = -p.c;
  q.z_l = -p.z_l;
  q.z_r = -p.z_r;
  q.increasing = !p.increasing;
  auto flip = [](std::vector<ProfileSample>& s) {
    for (auto& smp : s) {
      smp.xi = -smp.xi;
      smp.z = -smp.z;
    }
    std::reverse(s.begin(), s.end());
  };
  flip(q.upper_samples);
  flip(q.lower_samples);
  return q;
}

void write_profile_csv(std::ostream& os, const ModelSpec& m, const ShockProfile& p) {
  csv::Writer w(os, {"xi", "phi", "z", "lambda"});
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const ProfileSample& s : ordered_samples(p)) {
    const double lambda = s.z == 0.0 ? nan : p.c + m.D(s.phi) * m.g(s.phi) / s.z;
    w.row({s.xi, s.phi, s.z, lambda});
  }
}

}  // namespace wavefront
