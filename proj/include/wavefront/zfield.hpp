#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "wavefront/model.hpp"

namespace wavefront {

/// Upper: z on [beta, 1] for the semi-wavefront leaving 1.
/// Lower: z on [0, alpha] for the semi-wavefront entering 0.
enum class Branch { Upper, Lower };

struct ZOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double eps_start = 1e-6;  // distance from the equilibrium where integration starts
  double z_floor = 1e-12;   // |z| below this counts as touchdown
  double max_step = 1e-3;   // node spacing cap in phi
  /// Touchdown is accepted only within this distance of beta (alpha on Lower).
  double touchdown_margin = 1e-6;
  long max_steps = 5'000'000;
};

struct ZNode {
  double phi;
  double z;
  double dz;  // dz/dphi from the ODE (the limiting slope at the equilibrium node)
};

/// Solution of dz/dphi = -c - D g / z with z = 0 at the equilibrium end and
/// z < 0 inside the band.
struct ZSolution {
  Branch branch = Branch::Upper;
  double c = 0.0;
  std::vector<ZNode> nodes;  // ascending in phi
  /// Inner end of the computed range: beta / alpha, or the requested stop point.
  double phi_inner = 0.0;
  /// z at phi_inner; exactly 0 after a touchdown.
  double z_at_inner = 0.0;
  bool reached_zero_before_inner = false;
  std::optional<double> touchdown_phi;
  /// Slope mu of z ~ mu (phi - 1) at the equilibrium (reflected for Lower).
  double start_slope = 0.0;
  /// True when the degenerate-endpoint power-law start was used instead of the linearization.
  bool series_start = false;

  double phi_min() const { return nodes.front().phi; }
  double phi_max() const { return nodes.back().phi; }
};

/// Semi-wavefront from 1 down to beta (or to `stop_at` in [beta, 1]).
/// Throws IntegrationFailure on step-count exhaustion or step underflow and
/// NonNegativeExcursion if z reaches 0 away from beta.
ZSolution solve_upper(const ModelSpec& m, double c, const ZOptions& opts = {},
                      std::optional<double> stop_at = std::nullopt);

/// Semi-wavefront from alpha to 0, computed through the reflection
/// w(phi) = z(1 - phi) with data D(1 - phi), -g(1 - phi) and speed -c.
/// `stop_at` in [0, alpha] truncates the range to [0, stop_at].
ZSolution solve_lower(const ModelSpec& m, double c, const ZOptions& opts = {},
                      std::optional<double> stop_at = std::nullopt);

/// Value of z_c at phi, integrating exactly up to phi (no interpolation).
/// z(1) = 0 on Upper and z(0) = 0 on Lower are returned without integrating.
double z_value(const ModelSpec& m, Branch branch, double c, double phi, const ZOptions& opts = {});

/// Cubic Hermite interpolation using the ODE slopes at the nodes. Returns the
/// node value exactly at nodes; never changes sign between nodes of equal
/// sign (falls back to linear interpolation if the cubic would).
/// Throws DomainError outside [phi_min, phi_max].
double eval_z(const ZSolution& zs, double phi);

/// CSV with header "phi,z".
void write_z_csv(std::ostream& os, const ZSolution& zs);

}  // namespace wavefront
