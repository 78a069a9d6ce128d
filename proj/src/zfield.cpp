#include "wavefront/zfield.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <string>

#include "wavefront/csv.hpp"
#include "wavefront/errors.hpp"
#include "wavefront/ode.hpp"

namespace wavefront {

namespace {

// Both branches reduce to one problem on x in [inner, 1]:
//   dz/dx = -c - H(x) / z,  z(1) = 0,  z < 0 on (inner, 1),
// with H > 0 inside the band and H(inner) = 0.
struct Reduced {
  std::function<double(double)> H;
  double c;
  double inner;
  double stop;
};

struct RawResult {
  std::vector<ZNode> nodes;  // descending in x, slopes dz/dx
  bool touchdown = false;
  double touch_x = 0.0;
  double mu = 0.0;
  bool series = false;
};

struct StartValue {
  double mu;     // limiting slope dz/dx at x = 1
  double kappa;  // curvature coefficient, z ~ mu (x-1) + kappa (x-1)^2
  bool series;
  double z_at(double s, const Reduced& p) const {
    if (!series) return -mu * s + kappa * s * s;
    const double h = p.H(1.0 - s);
    if (p.c > 0.0) return -h / p.c;
    if (p.c < 0.0) return -mu * s;
    return -std::sqrt(std::max(h, 0.0) * s / 1.5);
  }
};

// Desingularized start at the equilibrium: the linearization z = mu (x - 1)
// needs mu^2 + c mu + H'(1) = 0 with mu > 0. When H'(1) vanishes (D or g'
// degenerate at 1) a power-law balance is used instead.
StartValue start_value(const Reduced& p) {
  const double d = std::min(1e-4, 0.25 * (1.0 - p.inner));
  const double h0 = p.H(1.0), h1 = p.H(1.0 - d), h2 = p.H(1.0 - 2.0 * d);
  const double L = (3.0 * h0 - 4.0 * h1 + h2) / (2.0 * d);
  const double half_h2 = (h0 - 2.0 * h1 + h2) / (2.0 * d * d);

  double h_scale = 0.0;
  for (int i = 1; i < 16; ++i) h_scale = std::max(h_scale, std::abs(p.H(p.inner + (1.0 - p.inner) * i / 16.0)));
  h_scale /= (1.0 - p.inner);

  StartValue sv{0.0, 0.0, false};
  if (L < -1e-8 * h_scale) {
    const double disc = std::sqrt(p.c * p.c - 4.0 * L);
    sv.mu = p.c >= 0.0 ? -2.0 * L / (p.c + disc) : 0.5 * (-p.c + disc);
    sv.kappa = -half_h2 / (sv.mu * (2.0 - L / (sv.mu * sv.mu)));
    return sv;
  }
  sv.series = true;
  sv.mu = p.c < 0.0 ? -p.c : 0.0;
  return sv;
}

RawResult integrate(const Reduced& p, const ZOptions& o) {
  RawResult r;
  const StartValue sv = start_value(p);
  r.mu = sv.mu;
  r.series = sv.series;
  r.nodes.push_back({1.0, 0.0, sv.mu});
  if (p.stop >= 1.0) return r;

  const double t_end = 1.0 - p.stop;
  const double eps = std::min(o.eps_start, 0.5 * t_end);
  if (t_end <= o.eps_start) {
    // The requested point lies inside the start layer.
    const double z = sv.z_at(t_end, p);
    r.nodes.push_back({p.stop, z, -p.c - p.H(p.stop) / z});
    return r;
  }

  // t = 1 - x, y(t) = z(1 - t): dy/dt = c + H(1 - t) / y.
  auto f = [&p](double t, double y) { return p.c + p.H(1.0 - t) / y; };

  double t = eps;
  double y = sv.z_at(eps, p);
  if (!(y < 0.0)) throw IntegrationFailure("start value is not negative near the equilibrium");
  double k1 = f(t, y);
  r.nodes.push_back({1.0 - t, y, -k1});
  double h = 0.1 * eps;
  long steps = 0;

  while (t < t_end) {
    if (++steps > o.max_steps) throw IntegrationFailure("step budget exhausted at phi=" + std::to_string(1.0 - t));
    const bool last = h >= t_end - t;
    const double hh = last ? t_end - t : h;
    const ode::TrialStep tr = ode::dopri5_trial(f, t, y, hh, k1);
    const double x = 1.0 - t;
    const double h_min = 1e-13 * std::max(t, eps);

    if (!tr.finite || tr.max_stage >= -o.z_floor) {
      if (x - p.inner <= o.touchdown_margin) {
        r.touchdown = true;
        r.touch_x = x;
        break;
      }
      if (hh < h_min) {
        throw NonNegativeExcursion("z reached 0 at phi=" + std::to_string(x) + ", away from the band end " +
                                   std::to_string(p.inner));
      }
      h = 0.25 * hh;
      continue;
    }

    const double scale = o.atol + o.rtol * std::max(std::abs(y), std::abs(tr.y_new));
    const double err = tr.error / scale;
    if (err <= 1.0) {
      t = last ? t_end : t + hh;
      y = tr.y_new;
      k1 = tr.k_last;
      r.nodes.push_back({1.0 - t, y, -k1});
      const double fac = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      h = std::min(hh * fac, o.max_step);
    } else {
      h = hh * std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
      if (h < h_min) throw IntegrationFailure("step size underflow at phi=" + std::to_string(x));
    }
  }

  if (r.touchdown) {
    const ZNode& lastn = r.nodes.back();
    const double dx = lastn.phi - p.stop;
    const double slope = dx > 0.0 ? lastn.z / dx : lastn.dz;
    if (dx > 0.0) r.nodes.push_back({p.stop, 0.0, slope});
    else r.nodes.back().z = 0.0;
  }
  return r;
}

ZSolution package(const RawResult& raw, Branch branch, double c, double phi_inner) {
  ZSolution zs;
  zs.branch = branch;
  zs.c = c;
  zs.phi_inner = phi_inner;
  zs.start_slope = raw.mu;
  zs.series_start = raw.series;
  zs.reached_zero_before_inner = raw.touchdown;
  zs.nodes.reserve(raw.nodes.size());
  if (branch == Branch::Upper) {
    for (auto it = raw.nodes.rbegin(); it != raw.nodes.rend(); ++it) zs.nodes.push_back(*it);
    if (raw.touchdown) zs.touchdown_phi = raw.touch_x;
  } else {
    for (const ZNode& n : raw.nodes) zs.nodes.push_back({1.0 - n.phi, n.z, -n.dz});
    if (raw.touchdown) zs.touchdown_phi = 1.0 - raw.touch_x;
  }
  zs.z_at_inner = raw.touchdown ? 0.0 : (branch == Branch::Upper ? zs.nodes.front().z : zs.nodes.back().z);
  return zs;
}

constexpr double kSlack = 1e-14;

}  // namespace

ZSolution solve_upper(const ModelSpec& m, double c, const ZOptions& opts, std::optional<double> stop_at) {
  const double beta = m.beta();
  double stop = stop_at.value_or(beta);
  if (stop < beta - kSlack || stop > 1.0 + kSlack) {
    throw DomainError("upper branch stop point " + std::to_string(stop) + " outside [beta, 1]");
  }
  stop = std::clamp(stop, beta, 1.0);
  Reduced p{[&m](double x) { return m.Dg(x); }, c, beta, stop};
  return package(integrate(p, opts), Branch::Upper, c, stop);
}

ZSolution solve_lower(const ModelSpec& m, double c, const ZOptions& opts, std::optional<double> stop_at) {
  const double alpha = m.alpha();
  double stop = stop_at.value_or(alpha);
  if (stop < -kSlack || stop > alpha + kSlack) {
    throw DomainError("lower branch stop point " + std::to_string(stop) + " outside [0, alpha]");
  }
  stop = std::clamp(stop, 0.0, alpha);
  // Reflected data: D(1 - x) * (-g(1 - x)) > 0 on (1 - alpha, 1), speed -c.
  Reduced p{[&m](double x) { return -m.D(1.0 - x) * m.g(1.0 - x); }, -c, 1.0 - alpha, 1.0 - stop};
  return package(integrate(p, opts), Branch::Lower, c, stop);
}

double z_value(const ModelSpec& m, Branch branch, double c, double phi, const ZOptions& opts) {
  if (branch == Branch::Upper) {
    if (phi >= 1.0) return 0.0;
    return solve_upper(m, c, opts, phi).z_at_inner;
  }
  if (phi <= 0.0) return 0.0;
  return solve_lower(m, c, opts, phi).z_at_inner;
}

double eval_z(const ZSolution& zs, double phi) {
  const auto& n = zs.nodes;
  if (n.empty() || phi < n.front().phi - kSlack || phi > n.back().phi + kSlack) {
    throw DomainError("phi=" + std::to_string(phi) + " outside the solved range");
  }
  if (n.size() == 1) return n.front().z;
  phi = std::clamp(phi, n.front().phi, n.back().phi);
  auto it = std::lower_bound(n.begin(), n.end(), phi, [](const ZNode& a, double v) { return a.phi < v; });
  if (it != n.end() && it->phi == phi) return it->z;
  const ZNode& b = *it;
  const ZNode& a = *(it - 1);
  const double h = b.phi - a.phi;
  const double s = (phi - a.phi) / h;
  const double s2 = s * s, s3 = s2 * s;
  const double value = (2 * s3 - 3 * s2 + 1) * a.z + (s3 - 2 * s2 + s) * h * a.dz + (-2 * s3 + 3 * s2) * b.z +
                       (s3 - s2) * h * b.dz;
  const bool both_nonpos = a.z <= 0.0 && b.z <= 0.0;
  const bool both_nonneg = a.z >= 0.0 && b.z >= 0.0;
  if ((both_nonpos && value > 0.0) || (both_nonneg && value < 0.0)) return a.z + s * (b.z - a.z);
  return value;
}

void write_z_csv(std::ostream& os, const ZSolution& zs) {
  csv::Writer w(os, {"phi", "z"});
  for (const ZNode& n : zs.nodes) w.row({n.phi, n.z});
}

}  // namespace wavefront
