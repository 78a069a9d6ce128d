#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wavefront/admissible.hpp"
#include "wavefront/parallel.hpp"
#include "wavefront/zfield.hpp"

namespace wavefront {

struct SpeedOptions {
  double tol_c = 1e-9;  // final bracket width
  double c_max = 1e6;   // bracket search limit
  ZOptions z;
};

struct SpeedResult {
  double phi_l = 0.0;
  double phi_r = 0.0;
  double c_star = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  double F_residual = 0.0;  // |F(c_star, phi_l)|
  double z_l = 0.0;         // z at phi_l on the Lower branch, speed c_star
  double z_r = 0.0;         // z at phi_r on the Upper branch, speed c_star
  /// |c_star + (z_r - z_l) / (phi_r - phi_l)|
  double consistency_defect = 0.0;
  /// F_residual <= 1e-7 (1 + |c_star|)
  bool trusted = false;
};

/// Jump functional z_c(eta(phi_l)) - z_c(phi_l) + c (eta(phi_l) - phi_l).
/// z_c(0) = 0 and z_c(1) = 0 are used exactly. Increasing in c and in phi_l.
double F(const AdmissibleSet& adm, double c, double phi_l, const ZOptions& zopts = {});

/// Unique zero of F(., phi_l): doubling search from c = 0 (+-1, +-2, +-4, ...)
/// up to |c| = c_max, then bisection. Throws BracketFailure when no sign
/// change is found, DomainError when phi_l is outside I.
SpeedResult solve_speed(const AdmissibleSet& adm, double phi_l, const SpeedOptions& opts = {});

struct SweepRow {
  double phi_l = 0.0;
  std::optional<SpeedResult> result;
  std::string error;  // exception message when result is empty
  bool bracket_failure = false;
};

/// n >= 2 equally spaced left states covering I, in increasing order.
std::vector<double> sweep_grid(const AdmissibleSet& adm, int n);

/// solve_speed on every grid point; rows are returned in grid order whatever
/// the execution mode. Per-row errors are recorded, not thrown.
std::vector<SweepRow> sweep(const AdmissibleSet& adm, int n, const SpeedOptions& opts = {},
                            Execution exec = Execution::Parallel);

/// Index of the first row i with c*(i) >= c*(i-1) - tie_tol among consecutive solved rows.
std::optional<std::size_t> first_monotonicity_violation(const std::vector<SweepRow>& rows, double tie_tol = 1e-10);

/// CSV with header "phi_l,phi_r,c_star,z_l,z_r,F_residual"; failed rows carry nan.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

struct BoundsOptions {
  int grid = 1024;
  int refine = 4;  // extra density factor around the coarse argmax
  double rel_tol = 1e-12;
  Execution exec = Execution::Parallel;
};

struct SpeedBounds {
  double c_minus = 0.0;
  double c_plus = 0.0;
  double sup_upper_integral = 0.0;  // S+, sup over (beta, 1]
  double sup_lower_integral = 0.0;  // S-, sup over [0, alpha)
  double argmax_upper = 0.0;
  double argmax_lower = 0.0;
};

/// S+ = sup_{phi in (beta,1]} 1/(phi - beta) int_beta^phi g D / (s - beta) ds,
/// S- = sup_{phi in [0,alpha)} 1/(alpha - phi) int_phi^alpha (-g D) / (alpha - s) ds,
/// c_plus = 2 sqrt(S+), c_minus = -2 sqrt(S-).
/// Throws PreconditionError unless P(beta) >= P(0) and P(alpha) <= P(1).
SpeedBounds speed_bounds(const ModelSpec& m, const BoundsOptions& opts = {});

/// Averaged integral at a single phi (the function whose sup defines S+ or S-).
double averaged_upper(const ModelSpec& m, double phi, double rel_tol = 1e-12);
double averaged_lower(const ModelSpec& m, double phi, double rel_tol = 1e-12);

}  // namespace wavefront
