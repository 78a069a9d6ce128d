#include <doctest.h>

#include <cmath>

#include "test_models.hpp"
#include "wavefront/admissible.hpp"
#include "wavefront/biomodel.hpp"
#include "wavefront/errors.hpp"

using namespace wavefront;
using namespace wavefront::testing;

TEST_CASE("closed forms at omega = 1/3") {
  const bio::BioDerived d = bio::derive(bio_third());
  CHECK(d.omega == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(std::abs(d.alpha - 5.0 / 9.0) <= 1e-12);
  CHECK(std::abs(d.beta - 7.0 / 9.0) <= 1e-12);
  CHECK(std::abs(d.gamma - 2.0 / 3.0) <= 1e-12);
  CHECK(std::abs(d.I_lo - 4.0 / 9.0) <= 1e-12);
  CHECK(std::abs(d.I_hi - 5.0 / 9.0) <= 1e-12);
  CHECK(std::abs(bio::eta_closed(d, d.I_lo) - 7.0 / 9.0) <= 1e-12);
  CHECK(std::abs(bio::eta_closed(d, d.I_hi) - 8.0 / 9.0) <= 1e-12);
  CHECK(bio::eta_closed(d, 0.5) == doctest::Approx(0.877293769304328889).epsilon(1e-14));
}

TEST_CASE("closed form at omega = 2/3 and agreement with the generic pipeline") {
  const bio::BioDerived d = bio::derive(bio_two_thirds());
  CHECK(d.omega == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(std::abs(d.I_hi - (0.5 - std::sqrt(7.0) / (6.0 * std::sqrt(3.0)))) <= 1e-12);
  const AdmissibleSet s = admissible_set(bio::make_model(bio_two_thirds()));
  CHECK(std::abs(s.I_lo() - d.I_lo) <= 1e-9);
  CHECK(std::abs(s.I_hi() - d.I_hi) <= 1e-9);
  for (int i = 0; i <= 10; ++i) {
    const double u = d.I_lo + (d.I_hi - d.I_lo) * i / 10.0;
    CHECK(std::abs(s.eta(u) - bio::eta_closed(d, u)) <= 1e-9);
  }
}

TEST_CASE("D-continuity state and jump maximizer at omega = 1/sqrt(3)") {
  const auto bp = bio_inv_sqrt3();
  const bio::BioDerived d = bio::derive(bp);
  CHECK(d.omega == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  REQUIRE(d.dcont_phi_l.has_value());
  CHECK(std::abs(*d.dcont_phi_l - 1.0 / 3.0) <= 1e-10);
  CHECK(std::abs(d.jump_max_phi_l - 1.0 / 3.0) <= 1e-10);
  const Polynomial D = bio::diffusivity(bp);
  CHECK(std::abs(D(*d.dcont_phi_l) - D(bio::eta_closed(d, *d.dcont_phi_l))) <= 1e-10);
}

TEST_CASE("jump maximizer agrees with a grid search") {
  for (const auto& bp : {bio_third(), bio_two_thirds(), bio_inv_sqrt3()}) {
    const bio::BioDerived d = bio::derive(bp);
    double best = d.I_lo, best_val = -1.0;
    for (int i = 0; i <= 100000; ++i) {
      const double u = d.I_lo + (d.I_hi - d.I_lo) * i / 100000.0;
      const double v = bio::jump_function(d, u);
      if (v > best_val) best_val = v, best = u;
    }
    CHECK(d.jump_max_phi_l == doctest::Approx(best).epsilon(1e-4));
    CHECK(bio::jump_function(d, d.jump_max_phi_l) >= best_val - 1e-12);
  }
}

TEST_CASE("D-continuity state exists only up to omega = 1/sqrt(3)") {
  CHECK(bio::derive(bio_third()).dcont_phi_l.has_value());
  CHECK_FALSE(bio::derive(bio_two_thirds()).dcont_phi_l.has_value());
}

TEST_CASE("speed interval") {
  const auto [lo, hi] = bio::speed_interval(bio_third());
  CHECK(lo == doctest::Approx(-2.0 * std::sqrt(35.0 * 2.0)));
  CHECK(hi == doctest::Approx(2.0 * std::sqrt(8.0)));
}

TEST_CASE("invalid parameters") {
  auto bad = [](auto mutate) {
    bio::BioParams bp = bio_third();
    mutate(bp);
    return bp;
  };
  CHECK_THROWS_AS(bio::validate(bad([](auto& b) { b.Dg = 0.0; })), ParamError);
  CHECK_THROWS_AS(bio::validate(bad([](auto& b) { b.Di = 32.0; })), ParamError);  // Di = 4 Dg
  CHECK_THROWS_AS(bio::validate(bad([](auto& b) { b.kg = 0.5; })), ParamError);
  CHECK_THROWS_AS(bio::validate(bad([](auto& b) { b.ki = 1.0; })), ParamError);
  CHECK_THROWS_AS(bio::validate(bad([](auto& b) { b.lambdag = 0.0; })), ParamError);
  CHECK_THROWS_AS(bio::validate(bad([](auto& b) { b.lambdag = 5.0; })), ParamError);  // ratio too large
  CHECK_THROWS_AS(bio::validate(bad([](auto& b) { b.lambdai = -1.0; })), ParamError);
  CHECK_THROWS_AS(bio::speed_interval(bad([](auto& b) { b.Dg = 0.0; })), ParamError);
  CHECK_THROWS_AS(bio::make_model(bad([](auto& b) { b.Dg = 0.0; })), ParamError);
  CHECK_NOTHROW(bio::validate(bio_third()));
}

TEST_CASE("closed-form eta outside I is rejected") {
  const bio::BioDerived d = bio::derive(bio_third());
  CHECK_THROWS_AS(bio::eta_closed(d, 0.3), DomainError);
}

TEST_CASE("generic zeros agree with the closed forms") {
  for (const auto& bp : {bio_third(), bio_two_thirds(), bio_inv_sqrt3()}) {
    const bio::BioDerived d = bio::derive(bp);
    const ModelSpec m = bio::make_model(bp);
    CHECK(std::abs(m.alpha() - d.alpha) <= 1e-12);
    CHECK(std::abs(m.beta() - d.beta) <= 1e-12);
    CHECK(std::abs(m.gamma() - d.gamma) <= 1e-12);
  }
}
