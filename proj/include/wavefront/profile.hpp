#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "wavefront/admissible.hpp"
#include "wavefront/speed.hpp"
#include "wavefront/zfield.hpp"

namespace wavefront {

struct ProfileOptions {
  int samples_per_band = 512;
  /// Tails are cut where the distance to the equilibrium drops below this.
  double tail_cut = 1e-6;
  double quad_rel_tol = 1e-10;
  double xi_s = 0.0;
  ZOptions z;
  /// Reject speeds whose jump conditions fail. Disabled only for negative controls.
  bool check_consistency = true;
};

struct ProfileSample {
  double xi;
  double phi;
  double z;  // D(phi) phi'(xi)
};

struct Saturation {
  bool reaches_1_at_finite_xi = false;
  bool reaches_0_at_finite_xi = false;
};

/// Discontinuous profile: upper band for xi <= xi_s, lower band for xi >= xi_s
/// (mirrored when `increasing`).
struct ShockProfile {
  double xi_s = 0.0;
  double phi_l = 0.0;  // lower-band side of the jump
  double phi_r = 0.0;  // upper-band side of the jump
  double c = 0.0;
  double z_l = 0.0;
  double z_r = 0.0;
  /// Sorted by xi. The last upper sample is (xi_s, phi_r) and the first lower
  /// sample is (xi_s, phi_l) in the decreasing orientation.
  std::vector<ProfileSample> upper_samples;
  std::vector<ProfileSample> lower_samples;
  bool upper_constant = false;  // phi_r = 1: identically 1 on the upper side
  bool lower_constant = false;  // phi_l = 0: identically 0 on the lower side
  Saturation saturation;
  bool increasing = false;
};

/// Integrates d(xi)/d(phi) = D / z on both bands and glues them at xi_s.
/// Throws ConsistencyError if |P(phi_r) - P(phi_l)| > 1e-8 or
/// |(z_r + c phi_r) - (z_l + c phi_l)| > 1e-6 at the speed sr.c_star
/// (unless opts.check_consistency is false).
ShockProfile build_profile(const ModelSpec& m, const SpeedResult& sr, const ProfileOptions& opts = {});

struct WeakReport {
  double sup_residual = 0.0;  // max of the two bands
  double sup_residual_upper = 0.0;
  double sup_residual_lower = 0.0;
  double jump_P_defect = 0.0;     // |P(phi_r) - P(phi_l)|
  double jump_flux_defect = 0.0;  // |(z_r + c phi_r) - (z_l + c phi_l)|
  std::size_t monotonicity_violations = 0;
  /// max |D(phi) phi'(xi) - z| over 20 interior check points, phi' by finite differences.
  double redifferentiation_defect = 0.0;
  std::size_t residual_points = 0;

  bool passes(double residual_tol = 1e-4, double P_tol = 1e-8, double flux_tol = 1e-6) const {
    return sup_residual <= residual_tol && jump_P_defect <= P_tol && jump_flux_defect <= flux_tol &&
           monotonicity_violations == 0;
  }
};

/// Residual of P(phi)'' + c phi' + g(phi) by 5-point finite differences in xi
/// within each band, scaled by the band maximum of |P(phi)''| + |c phi'| + |g|.
/// A jump landing exactly on a zero of D gives phi' unbounded at xi_s; the
/// stencils next to the jump then do not resolve the profile.
/// Never differentiates across the jump. Never throws.
WeakReport verify_weak(const ModelSpec& m, const ShockProfile& p);

/// Same report for a piecewise-constant front: plateau residuals |g(level)|,
/// jump defects max |P(a) - P(b)| over the jumps.
WeakReport verify_step_front(const ModelSpec& m, const StepFront& front);

struct CharacteristicSpeed {
  double phi;
  double lambda;  // c + D g / z
  bool upper;
};

struct CharacteristicReport {
  std::vector<CharacteristicSpeed> speeds;
  /// lambda >= c on the lower band and lambda <= c on the upper band.
  bool entropic = true;
};

/// Samples with z = 0 (equilibria) are skipped.
CharacteristicReport characteristic_speeds(const ModelSpec& m, const ShockProfile& p);

/// psi(xi) = phi(-xi): increasing profile with speed -c and z -> -z.
ShockProfile reflect_profile(const ShockProfile& p);

/// All samples in increasing xi; at xi_s both side limits appear.
std::vector<ProfileSample> ordered_samples(const ShockProfile& p);

/// CSV with header "xi,phi,z,lambda"; lambda is nan where z = 0.
void write_profile_csv(std::ostream& os, const ModelSpec& m, const ShockProfile& p);

}  // namespace wavefront
