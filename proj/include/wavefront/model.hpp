#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "wavefront/polynomial.hpp"

namespace wavefront {

using ScalarFn = std::function<double(double)>;

/// Problem data for u_t = P(u)_xx + g(u) on densities in [0, 1].
///
/// `D` and `dD` are optional: when empty, D is taken as the central finite
/// difference of P and dD as the central finite difference of D.
struct ModelFunctions {
  ScalarFn P;
  ScalarFn g;
  ScalarFn D;
  ScalarFn dD;
};

/// Exact D = P' and D' for polynomial data.
ModelFunctions from_polynomials(const Polynomial& P, const Polynomial& g);

struct ModelOptions {
  int scan_points = 2048;     // sign-change scan for the zeros of D and g
  int check_points = 4096;    // structural sign checks
  double root_tol = 1e-15;    // bisection tolerance for alpha, beta, gamma
  double tol_struct = 1e-10;  // slack on sign checks and on g(0), g(1)
  double fd_step = 1e-6;      // central difference step when D is not supplied
  int consistency_intervals = 24;
};

/// Optional brackets for the zeros; each must straddle a sign change.
struct RootHints {
  std::optional<std::pair<double, double>> alpha;
  std::optional<std::pair<double, double>> beta;
  std::optional<std::pair<double, double>> gamma;
};

/// Validated model: D > 0 on (0, alpha) and (beta, 1), D < 0 on (alpha, beta),
/// g < 0 on (0, gamma), g > 0 on (gamma, 1), g(0) = g(1) = 0 and
/// 0 < alpha < gamma < beta < 1. Immutable once built.
class ModelSpec {
 public:
  double P(double u) const { return fns_.P(u); }
  double D(double u) const;
  double dD(double u) const;
  double g(double u) const { return fns_.g(u); }
  /// Product D(u) g(u), the only combination entering the reduced ODE.
  double Dg(double u) const { return D(u) * g(u); }

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }
  double tol_struct() const noexcept { return tol_struct_; }
  double fd_step() const noexcept { return fd_step_; }
  bool analytic_D() const noexcept { return static_cast<bool>(fns_.D); }

  const ModelFunctions& functions() const noexcept { return fns_; }

 private:
  friend ModelSpec build_model(ModelFunctions, const ModelOptions&, const RootHints&);
  ModelFunctions fns_;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  double gamma_ = 0.0;
  double tol_struct_ = 1e-10;
  double fd_step_ = 1e-6;
};

/// Locates alpha, beta (sign changes of D) and gamma (interior sign change of
/// g) and validates the structural hypotheses on a dense grid.
/// Throws StructureViolation with a descriptive message on failure.
///
/// A model that passes the grid checks but violates the sign pattern between
/// grid nodes is not detected.
ModelSpec build_model(ModelFunctions fns, const ModelOptions& opts = {}, const RootHints& hints = {});

enum class RegimeKind { ShockFamily, PiecewiseConstantOnly, NoShock };

std::string to_string(RegimeKind kind);

struct RegimeFlags {
  bool P_beta_ge_P0 = false;
  bool P_alpha_le_P1 = false;
  bool P_gamma_eq_P0 = false;
};

struct RegimeClass {
  RegimeKind kind = RegimeKind::NoShock;
  double delta_P = 0.0;  // P(1) - P(0)
  RegimeFlags flags;
};

/// 1e-10 * (1 + |P(1)| + |P(0)|)
double default_eq_tol(const ModelSpec& m);

/// Sign of P(1) - P(0) decides the regime; |P(1) - P(0)| <= eq_tol counts as equality.
/// The same tolerance is used for the comparisons behind the flags.
RegimeClass classify(const ModelSpec& m, std::optional<double> eq_tol = std::nullopt);

}  // namespace wavefront
