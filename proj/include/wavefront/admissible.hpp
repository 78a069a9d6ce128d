#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "wavefront/model.hpp"

namespace wavefront {

struct AdmissibleOptions {
  /// |P(phi_r) - P(phi_l)| allowed, relative to |P(1) - P(0)|.
  double pairing_tol_rel = 1e-11;
  int table_nodes = 512;
};

/// The admissible left states I = [I_lo, I_hi] within [0, alpha] together with
/// the increasing pairing map eta: I -> J = [J_lo, J_hi] within [beta, 1],
/// defined by P(eta(u)) = P(u).
class AdmissibleSet {
 public:
  double I_lo() const noexcept { return I_lo_; }
  double I_hi() const noexcept { return I_hi_; }
  double J_lo() const noexcept { return J_lo_; }
  double J_hi() const noexcept { return J_hi_; }
  double pairing_tol() const noexcept { return pairing_tol_; }
  const ModelSpec& model() const noexcept { return model_; }

  bool contains(double phi_l) const noexcept;

  /// Right state paired with phi_l. Throws DomainError outside I.
  double eta(double phi_l) const;
  /// Left state paired with phi_r. Throws DomainError outside J.
  double zeta(double phi_r) const;

  /// Cached monotone table of (phi_l, eta(phi_l)) on a uniform grid of I;
  /// a degenerate interval yields a single node.
  const std::vector<std::pair<double, double>>& table() const noexcept { return table_; }

 private:
  friend AdmissibleSet admissible_set(const ModelSpec&, const AdmissibleOptions&);
  ModelSpec model_;
  double I_lo_ = 0.0, I_hi_ = 0.0, J_lo_ = 0.0, J_hi_ = 0.0;
  double pairing_tol_ = 0.0;
  std::vector<std::pair<double, double>> table_;
};

/// Throws RegimeError unless classify(m).kind == ShockFamily.
AdmissibleSet admissible_set(const ModelSpec& m, const AdmissibleOptions& opts = {});

inline double eta_of(const AdmissibleSet& s, double phi_l) { return s.eta(phi_l); }
inline double zeta_of(const AdmissibleSet& s, double phi_r) { return s.zeta(phi_r); }

/// Piecewise-constant decreasing front with speed 0.
struct StepFront {
  std::vector<double> levels;       // strictly decreasing plateau values
  std::vector<double> jump_points;  // canonical positions 0 (and 1)
  double speed = 0.0;
};

/// Empty unless P(1) = P(0); then the 1 -> 0 front, plus 1 -> gamma -> 0
/// when P(gamma) = P(0) as well. Equalities are decided with eq_tol
/// (default_eq_tol when not given).
std::vector<StepFront> step_fronts(const ModelSpec& m, std::optional<double> eq_tol = std::nullopt);

/// CSV with header "phi_l,phi_r,P_value" on `n` uniform nodes of I.
void write_admissible_csv(std::ostream& os, const AdmissibleSet& s, int n);

}  // namespace wavefront
