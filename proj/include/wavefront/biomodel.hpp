#pragma once

#include <optional>
#include <utility>

#include "wavefront/model.hpp"
#include "wavefront/polynomial.hpp"

namespace wavefront::bio {

/// Isolated/grouped population invasion model:
///   D(u) = Di (1 - 4u + 3u^2) + Dg (4u - 3u^2)
///   g(u) = lg u (1-u) + [li - lg - (ki - kg)] u (1-u)^2 - kg u
struct BioParams {
  double Di = 35.0;
  double Dg = 8.0;
  double ki = 3.0;
  double kg = 0.0;
  double lambdai = 1.0;
  double lambdag = 1.0;
};

struct BioDerived {
  double omega = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double I_lo = 0.0;
  double I_hi = 0.0;
  /// Left state with D(phi_l) = D(eta(phi_l)); present iff omega <= 1/sqrt(3).
  std::optional<double> dcont_phi_l;
  double jump_max_phi_l = 0.0;
};

/// Throws ParamError unless Di > 4 Dg > 0, kg = 0, lambdag > 0, ki > lambdai
/// and the ratio lambdag / (ki - lambdai) lies strictly inside
/// ((1 - omega)/(2 + omega), (1 + omega)/(2 - omega)) with a 1e-12 margin.
void validate(const BioParams& bp);

double omega_of(const BioParams& bp);

/// Closed-form alpha, beta, gamma, admissible interval, D-continuity state and
/// jump maximizer.
BioDerived derive(const BioParams& bp);

/// eta(u) = (2 - u + sqrt(Delta_u)) / 2, Delta_u = -3u^2 + 4u - 4/3 + 4 omega^2 / 3.
/// Throws DomainError if Delta_u < -1e-14 or u is outside [I_lo, I_hi].
double eta_closed(const BioDerived& bd, double u);

/// Jump size eta(u) - u.
double jump_function(const BioDerived& bd, double u);

/// (-2 sqrt(Di (ki - lambdai)), 2 sqrt(lambdag Dg)); throws ParamError on invalid parameters.
std::pair<double, double> speed_interval(const BioParams& bp);

/// Potential with P(0) = 0.
Polynomial potential(const BioParams& bp);
Polynomial diffusivity(const BioParams& bp);
Polynomial reaction(const BioParams& bp);

/// Validates the parameters, then builds the generic model from the
/// polynomial data (zeros found numerically, not from the closed forms).
ModelSpec make_model(const BioParams& bp, const ModelOptions& opts = {});

}  // namespace wavefront::bio
