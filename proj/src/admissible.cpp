#include "wavefront/admissible.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "wavefront/csv.hpp"
#include "wavefront/errors.hpp"
#include "wavefront/roots.hpp"

namespace wavefront {

namespace {

constexpr double kDomainSlack = 1e-13;

// P restricted to [lo, hi] is increasing; solves P(x) = target there, clamping
// targets that fall outside the range by rounding.
double invert_branch(const ModelSpec& m, double target, double lo, double hi) {
  const roots::ScalarFn P = [&m](double u) { return m.P(u); };
  const roots::ScalarFn D = [&m](double u) { return m.D(u); };
  if (target <= m.P(lo)) return lo;
  if (target >= m.P(hi)) return hi;
  return roots::invert_increasing(P, target, lo, hi, &D).value_or(lo);
}

}  // namespace

bool AdmissibleSet::contains(double phi_l) const noexcept {
  return phi_l >= I_lo_ - kDomainSlack && phi_l <= I_hi_ + kDomainSlack;
}

double AdmissibleSet::eta(double phi_l) const {
  if (!contains(phi_l)) {
    throw DomainError("phi_l=" + std::to_string(phi_l) + " outside admissible interval [" + std::to_string(I_lo_) +
                      ", " + std::to_string(I_hi_) + "]");
  }
  if (phi_l <= I_lo_) return J_lo_;
  if (phi_l >= I_hi_) return J_hi_;
  return invert_branch(model_, model_.P(phi_l), model_.beta(), 1.0);
}

double AdmissibleSet::zeta(double phi_r) const {
  if (phi_r < J_lo_ - kDomainSlack || phi_r > J_hi_ + kDomainSlack) {
    throw DomainError("phi_r=" + std::to_string(phi_r) + " outside paired interval [" + std::to_string(J_lo_) +
                      ", " + std::to_string(J_hi_) + "]");
  }
  if (phi_r <= J_lo_) return I_lo_;
  if (phi_r >= J_hi_) return I_hi_;
  return invert_branch(model_, model_.P(phi_r), 0.0, model_.alpha());
}

AdmissibleSet admissible_set(const ModelSpec& m, const AdmissibleOptions& opts) {
  const RegimeClass rc = classify(m);
  if (rc.kind != RegimeKind::ShockFamily) {
    throw RegimeError("admissible pairs require P(1) > P(0); regime is " + to_string(rc.kind));
  }
  AdmissibleSet s;
  s.model_ = m;
  s.pairing_tol_ = opts.pairing_tol_rel * std::abs(rc.delta_P);
  const double tol = s.pairing_tol_;
  const double a = m.alpha();
  const double b = m.beta();
  const double p0 = m.P(0.0), pa = m.P(a), pb = m.P(b), p1 = m.P(1.0);

  if (std::abs(p0 - pb) <= tol) {
    s.I_lo_ = 0.0;
    s.J_lo_ = b;
  } else if (p0 > pb) {
    s.I_lo_ = 0.0;
    s.J_lo_ = invert_branch(m, p0, b, 1.0);
  } else {
    s.I_lo_ = invert_branch(m, pb, 0.0, a);
    s.J_lo_ = b;
  }

  if (std::abs(pa - p1) <= tol) {
    s.I_hi_ = a;
    s.J_hi_ = 1.0;
  } else if (pa < p1) {
    s.I_hi_ = a;
    s.J_hi_ = invert_branch(m, pa, b, 1.0);
  } else {
    s.I_hi_ = invert_branch(m, p1, 0.0, a);
    s.J_hi_ = 1.0;
  }

  const int n = std::max(1, opts.table_nodes);
  if (s.I_hi_ <= s.I_lo_ || n == 1) {
    s.table_.emplace_back(s.I_lo_, s.J_lo_);
  } else {
    s.table_.reserve(n);
    for (int i = 0; i < n; ++i) {
      const double u = (i == n - 1) ? s.I_hi_ : s.I_lo_ + (s.I_hi_ - s.I_lo_) * i / (n - 1);
      s.table_.emplace_back(u, s.eta(u));
    }
  }
  return s;
}

std::vector<StepFront> step_fronts(const ModelSpec& m, std::optional<double> eq_tol) {
  const double tol = eq_tol.value_or(default_eq_tol(m));
  std::vector<StepFront> out;
  const double p0 = m.P(0.0);
  if (std::abs(m.P(1.0) - p0) > tol) return out;
  out.push_back(StepFront{{1.0, 0.0}, {0.0}, 0.0});
  if (std::abs(m.P(m.gamma()) - p0) <= tol) {
    out.push_back(StepFront{{1.0, m.gamma(), 0.0}, {0.0, 1.0}, 0.0});
  }
  return out;
}

void write_admissible_csv(std::ostream& os, const AdmissibleSet& s, int n) {
  csv::Writer w(os, {"phi_l", "phi_r", "P_value"});
  n = std::max(1, n);
  for (int i = 0; i < n; ++i) {
    const double u = (n == 1 || i == n - 1) ? (n == 1 ? s.I_lo() : s.I_hi())
                                           : s.I_lo() + (s.I_hi() - s.I_lo()) * i / (n - 1);
    w.row({u, s.eta(u), s.model().P(u)});
  }
}

}  // namespace wavefront
