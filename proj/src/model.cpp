#include "wavefront/model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "wavefront/errors.hpp"
#include "wavefront/quadrature.hpp"
#include "wavefront/roots.hpp"

namespace wavefront {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// Bracket from a hint or from the scan; degenerate brackets are exact zeros.
double locate_zero(const ScalarFn& f, const std::pair<double, double>& bracket, double tol) {
  if (bracket.first == bracket.second) return bracket.first;
  return roots::bisect(f, bracket.first, bracket.second, tol);
}

bool rising(const ScalarFn& f, const std::pair<double, double>& br) {
  if (br.first == br.second) {
    const double h = 1e-9;
    return f(br.first + h) > f(br.first - h);
  }
  return f(br.second) > f(br.first);
}

}  // namespace

ModelFunctions from_polynomials(const Polynomial& P, const Polynomial& g) {
  Polynomial D = P.derivative();
  Polynomial dD = D.derivative();
  return ModelFunctions{[P](double u) { return P(u); }, [g](double u) { return g(u); },
                        [D](double u) { return D(u); }, [dD](double u) { return dD(u); }};
}

double ModelSpec::D(double u) const {
  if (fns_.D) return fns_.D(u);
  const double h = fd_step_;
  return (fns_.P(u + h) - fns_.P(u - h)) / (2.0 * h);
}

double ModelSpec::dD(double u) const {
  if (fns_.dD) return fns_.dD(u);
  const double h = fns_.D ? fd_step_ : std::sqrt(fd_step_) * 1e-1;
  return (D(u + h) - D(u - h)) / (2.0 * h);
}

ModelSpec build_model(ModelFunctions fns, const ModelOptions& opts, const RootHints& hints) {
  if (!fns.P || !fns.g) throw StructureViolation("model requires both P and g");
  ModelSpec m;
  m.fns_ = std::move(fns);
  m.tol_struct_ = opts.tol_struct;
  m.fd_step_ = opts.fd_step;

  const ScalarFn D = [&m](double u) { return m.D(u); };
  const ScalarFn g = [&m](double u) { return m.g(u); };

  // Zeros of D.
  std::pair<double, double> br_alpha, br_beta;
  if (hints.alpha && hints.beta) {
    br_alpha = *hints.alpha;
    br_beta = *hints.beta;
  } else {
    auto changes = roots::scan_sign_changes(D, 0.0, 1.0, opts.scan_points);
    if (changes.size() != 2) {
      throw StructureViolation("D must change sign exactly twice in (0,1); found " +
                               std::to_string(changes.size()) + " sign change(s)");
    }
    br_alpha = hints.alpha.value_or(changes[0]);
    br_beta = hints.beta.value_or(changes[1]);
  }
  if (rising(D, br_alpha) || !rising(D, br_beta)) {
    throw StructureViolation("D must go from positive to negative at alpha and back to positive at beta");
  }
  const double alpha = locate_zero(D, br_alpha, opts.root_tol);
  const double beta = locate_zero(D, br_beta, opts.root_tol);

  // Interior zero of g.
  std::pair<double, double> br_gamma;
  if (hints.gamma) {
    br_gamma = *hints.gamma;
  } else {
    auto changes = roots::scan_sign_changes(g, 0.0, 1.0, opts.scan_points);
    if (changes.size() != 1) {
      throw StructureViolation("g must change sign exactly once in (0,1); found " +
                               std::to_string(changes.size()) + " sign change(s)");
    }
    br_gamma = changes[0];
  }
  if (!rising(g, br_gamma)) throw StructureViolation("g must be negative below gamma and positive above");
  const double gamma = locate_zero(g, br_gamma, opts.root_tol);

  if (!(0.0 < alpha && alpha < gamma && gamma < beta && beta < 1.0)) {
    throw StructureViolation("ordering 0 < alpha < gamma < beta < 1 violated: alpha=" + fmt(alpha) +
                             ", gamma=" + fmt(gamma) + ", beta=" + fmt(beta));
  }
  m.alpha_ = alpha;
  m.beta_ = beta;
  m.gamma_ = gamma;

  const double tol = opts.tol_struct;
  if (std::abs(m.g(0.0)) > tol || std::abs(m.g(1.0)) > tol) {
    throw StructureViolation("g(0) and g(1) must vanish; got g(0)=" + fmt(m.g(0.0)) + ", g(1)=" + fmt(m.g(1.0)));
  }

  const int n = opts.check_points;
  for (int i = 1; i < n - 1; ++i) {
    const double u = static_cast<double>(i) / (n - 1);
    const double d = m.D(u);
    const bool positive_band = u < alpha || u > beta;
    if (positive_band ? d < -tol : d > tol) {
      throw StructureViolation("D has the wrong sign at u=" + fmt(u) + " (D=" + fmt(d) + ")");
    }
    const double gv = m.g(u);
    if (u < gamma ? gv > tol : gv < -tol) {
      throw StructureViolation("g has the wrong sign at u=" + fmt(u) + " (g=" + fmt(gv) + ")");
    }
  }

  // D = P' on random sub-intervals.
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double p_scale = 0.0;
  for (int i = 0; i <= 64; ++i) p_scale = std::max(p_scale, std::abs(m.P(i / 64.0)));
  for (int k = 0; k < opts.consistency_intervals; ++k) {
    double a = unif(rng);
    double b = unif(rng);
    if (a > b) std::swap(a, b);
    // A finite-difference D carries rounding noise; a tight tolerance would never converge.
    const double integral = quad::integrate(D, a, b, m.analytic_D() ? 1e-12 : 1e-9);
    const double defect = std::abs(m.P(b) - m.P(a) - integral);
    const double allowed = (m.analytic_D() ? 1e-10 : 1e-7) * (1.0 + p_scale);
    if (defect > allowed) {
      throw StructureViolation("D is not the derivative of P on [" + fmt(a) + ", " + fmt(b) +
                               "] (defect " + fmt(defect) + ")");
    }
  }
  return m;
}

std::string to_string(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::ShockFamily:
      return "ShockFamily";
    case RegimeKind::PiecewiseConstantOnly:
      return "PiecewiseConstantOnly";
    case RegimeKind::NoShock:
      return "NoShock";
  }
  return "unknown";
}

double default_eq_tol(const ModelSpec& m) {
  return 1e-10 * (1.0 + std::abs(m.P(1.0)) + std::abs(m.P(0.0)));
}

RegimeClass classify(const ModelSpec& m, std::optional<double> eq_tol) {
  const double tol = eq_tol.value_or(default_eq_tol(m));
  const double p0 = m.P(0.0);
  const double p1 = m.P(1.0);
  RegimeClass rc;
  rc.delta_P = p1 - p0;
  if (std::abs(rc.delta_P) <= tol) {
    rc.kind = RegimeKind::PiecewiseConstantOnly;
  } else {
    rc.kind = rc.delta_P > 0.0 ? RegimeKind::ShockFamily : RegimeKind::NoShock;
  }
  rc.flags.P_beta_ge_P0 = m.P(m.beta()) >= p0 - tol;
  rc.flags.P_alpha_le_P1 = m.P(m.alpha()) <= p1 + tol;
  rc.flags.P_gamma_eq_P0 = std::abs(m.P(m.gamma()) - p0) <= tol;
  return rc;
}

}  // namespace wavefront
