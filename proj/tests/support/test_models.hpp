#pragma once

#include "wavefront/biomodel.hpp"
#include "wavefront/model.hpp"
#include "wavefront/polynomial.hpp"

namespace wavefront::testing {

// alpha = 1/4, beta = 3/4, gamma = 1/2; P(beta) = P(0) and P(alpha) = P(1) > P(0).
inline Polynomial equal_ends_P() { return Polynomial({0.0, 0.5625, -1.5, 1.0}); }
// u (1 - u) (u - 1/2)
inline Polynomial cubic_g_half() { return Polynomial({0.0, -0.5, 1.5, -1.0}); }

inline ModelSpec equal_ends_model() { return build_model(from_polynomials(equal_ends_P(), cubic_g_half())); }

// alpha = 0.2, beta = 0.7, P(beta) < P(0) < P(alpha) < P(1): phi_l = 0 is admissible
// and pairs with phi_r > beta.
inline ModelSpec lower_constant_model() {
  return build_model(from_polynomials(Polynomial({0.0, 0.42, -1.35, 1.0}), cubic_g_half()));
}
// alpha = 0.3, beta = 0.8, P(0) < P(beta) and P(1) < P(alpha): phi_r = 1 is admissible
// and pairs with phi_l < alpha.
inline ModelSpec upper_constant_model() {
  return build_model(from_polynomials(Polynomial({0.0, 0.72, -1.65, 1.0}), cubic_g_half()));
}

// alpha = 1/4, beta = 5/6, P(1) = P(0) = P(5/8) = 0.
inline Polynomial balanced_P() { return Polynomial({0.0, 0.625, -1.625, 1.0}); }
// u (1 - u) (u - 5/8)
inline Polynomial cubic_g_five_eighths() { return Polynomial({0.0, -0.625, 1.625, -1.0}); }

inline ModelSpec balanced_model_two_steps() {
  return build_model(from_polynomials(balanced_P(), cubic_g_five_eighths()));
}
inline ModelSpec balanced_model_one_step() { return build_model(from_polynomials(balanced_P(), cubic_g_half())); }

// alpha = 1/4, beta = 0.95, P(1) < P(0).
inline ModelSpec no_shock_model() {
  return build_model(from_polynomials(Polynomial({0.0, 0.7125, -1.8, 1.0}), cubic_g_half()));
}

// omega = 1/3
inline bio::BioParams bio_third() { return {35.0, 8.0, 3.0, 0.0, 1.0, 1.0}; }
// omega = 2/3
inline bio::BioParams bio_two_thirds() { return {32.0, 5.0, 3.0, 0.0, 1.0, 1.0}; }
// omega = 1/sqrt(3)
inline bio::BioParams bio_inv_sqrt3() { return {5.5, 1.0, 3.0, 0.0, 1.0, 1.0}; }

}  // namespace wavefront::testing
