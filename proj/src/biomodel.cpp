#include "wavefront/biomodel.hpp"

#include <cmath>
#include <string>

#include "wavefront/errors.hpp"

namespace wavefront::bio {

namespace {
constexpr double kCaseTol = 1e-12;
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);
}  // namespace

double omega_of(const BioParams& bp) { return std::sqrt((bp.Di - 4.0 * bp.Dg) / (bp.Di - bp.Dg)); }

void validate(const BioParams& bp) {
  if (!(bp.Dg > 0.0 && bp.Di > 4.0 * bp.Dg)) {
    throw ParamError("diffusion parameters must satisfy Di > 4 Dg > 0 (Di=" + std::to_string(bp.Di) +
                     ", Dg=" + std::to_string(bp.Dg) + ")");
  }
  if (bp.ki < 0.0 || bp.kg < 0.0 || bp.lambdai < 0.0 || bp.lambdag < 0.0) {
    throw ParamError("kinetic parameters must be nonnegative");
  }
  if (bp.kg != 0.0) throw ParamError("kg must be 0");
  if (!(bp.lambdag > 0.0)) throw ParamError("lambdag must be positive");
  const double a = bp.ki - bp.lambdai;
  if (!(a > 0.0)) throw ParamError("ki must exceed lambdai");
  const double w = omega_of(bp);
  const double r = bp.lambdag / a;
  const double lo = (1.0 - w) / (2.0 + w);
  const double hi = (1.0 + w) / (2.0 - w);
  if (!(r > lo + kCaseTol && r < hi - kCaseTol)) {
    throw ParamError("lambdag/(ki - lambdai)=" + std::to_string(r) + " must lie in (" + std::to_string(lo) + ", " +
                     std::to_string(hi) + ") so that alpha < gamma < beta");
  }
}

BioDerived derive(const BioParams& bp) {
  validate(bp);
  BioDerived bd;
  const double w = omega_of(bp);
  bd.omega = w;
  bd.alpha = 2.0 / 3.0 - w / 3.0;
  bd.beta = 2.0 / 3.0 + w / 3.0;
  const double a = bp.ki - bp.lambdai;
  bd.gamma = a / (a + bp.lambdag);
  bd.I_lo = bd.alpha - w / 3.0;
  bd.I_hi = (w <= 0.5 + kCaseTol) ? bd.alpha : 0.5 - std::sqrt(4.0 * w * w - 1.0) / (2.0 * std::sqrt(3.0));
  if (w <= kInvSqrt3 + kCaseTol) {
    bd.dcont_phi_l = 2.0 / 3.0 - w / std::sqrt(3.0);
    bd.jump_max_phi_l = *bd.dcont_phi_l;
  } else {
    bd.jump_max_phi_l = bd.I_hi;
  }
  return bd;
}

double eta_closed(const BioDerived& bd, double u) {
  if (u < bd.I_lo - kCaseTol || u > bd.I_hi + kCaseTol) {
    throw DomainError("u=" + std::to_string(u) + " outside the admissible interval");
  }
  const double w2 = bd.omega * bd.omega;
  const double delta = -3.0 * u * u + 4.0 * u - 4.0 / 3.0 + 4.0 * w2 / 3.0;
  if (delta < -1e-14) throw DomainError("negative discriminant at u=" + std::to_string(u));
  return 0.5 * (2.0 - u + std::sqrt(std::max(delta, 0.0)));
}

double jump_function(const BioDerived& bd, double u) { return eta_closed(bd, u) - u; }

std::pair<double, double> speed_interval(const BioParams& bp) {
  validate(bp);
  return {-2.0 * std::sqrt(bp.Di * (bp.ki - bp.lambdai)), 2.0 * std::sqrt(bp.lambdag * bp.Dg)};
}

Polynomial potential(const BioParams& bp) {
  return Polynomial({0.0, bp.Di, -2.0 * bp.Di + 2.0 * bp.Dg, bp.Di - bp.Dg});
}

Polynomial diffusivity(const BioParams& bp) {
  return Polynomial({bp.Di, -4.0 * bp.Di + 4.0 * bp.Dg, 3.0 * bp.Di - 3.0 * bp.Dg});
}

Polynomial reaction(const BioParams& bp) {
  const double A = bp.lambdai - bp.lambdag - (bp.ki - bp.kg);
  return Polynomial({0.0, bp.lambdag + A - bp.kg, -bp.lambdag - 2.0 * A, A});
}

ModelSpec make_model(const BioParams& bp, const ModelOptions& opts) {
  validate(bp);
  return build_model(from_polynomials(potential(bp), reaction(bp)), opts);
}

}  // namespace wavefront::bio
