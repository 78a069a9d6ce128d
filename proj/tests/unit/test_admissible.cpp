#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "test_models.hpp"
#include "wavefront/admissible.hpp"
#include "wavefront/errors.hpp"
#include "wavefront/quadrature.hpp"

using namespace wavefront;
using namespace wavefront::testing;

TEST_CASE("bio admissible interval, omega = 1/3") {
  const ModelSpec m = bio::make_model(bio_third());
  const AdmissibleSet s = admissible_set(m);
  CHECK(s.I_lo() == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
  CHECK(s.I_hi() == doctest::Approx(5.0 / 9.0).epsilon(1e-12));
  CHECK(s.J_lo() == doctest::Approx(7.0 / 9.0).epsilon(1e-12));
  CHECK(s.J_hi() == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
  // mpmath: eta(1/2) for omega = 1/3
  CHECK(s.eta(0.5) == doctest::Approx(0.877293769304328889).epsilon(1e-13));
}

TEST_CASE("eta and zeta are inverse and increasing") {
  const ModelSpec m = bio::make_model(bio_two_thirds());
  const AdmissibleSet s = admissible_set(m);
  double prev = -1.0;
  for (int i = 0; i <= 20; ++i) {
    const double u = s.I_lo() + (s.I_hi() - s.I_lo()) * i / 20.0;
    const double r = s.eta(u);
    CHECK(r > prev);
    prev = r;
    CHECK(s.zeta(r) == doctest::Approx(u).epsilon(1e-11));
    CHECK(std::abs(m.P(r) - m.P(u)) <= 1e-11);
  }
  CHECK(s.J_hi() == 1.0);
}

TEST_CASE("equal-area certificate on random pairs") {
  const ModelSpec m = bio::make_model(bio_third());
  const AdmissibleSet s = admissible_set(m);
  double dmax = 0.0;
  for (int i = 0; i <= 1000; ++i) dmax = std::max(dmax, std::abs(m.D(i / 1000.0)));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(s.I_lo(), s.I_hi());
  for (int i = 0; i < 50; ++i) {
    const double pl = u(rng);
    const double area = quad::integrate([&](double x) { return m.D(x); }, pl, s.eta(pl), 1e-13);
    CHECK(std::abs(area) <= 1e-8 * dmax);
  }
}

TEST_CASE("endpoint conventions with P(beta) = P(0) and P(alpha) = P(1)") {
  const AdmissibleSet s = admissible_set(equal_ends_model());
  CHECK(s.I_lo() == 0.0);
  CHECK(s.I_hi() == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(s.eta(0.0) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(s.eta(s.I_hi()) == 1.0);
}

TEST_CASE("domain and regime errors") {
  const AdmissibleSet s = admissible_set(bio::make_model(bio_third()));
  CHECK_THROWS_AS(s.eta(0.3), DomainError);
  CHECK_THROWS_AS(s.zeta(0.5), DomainError);
  CHECK_THROWS_AS(admissible_set(no_shock_model()), RegimeError);
  CHECK_THROWS_AS(admissible_set(balanced_model_one_step()), RegimeError);
}

TEST_CASE("step fronts in the balanced regime") {
  const auto two = step_fronts(balanced_model_two_steps());
  REQUIRE(two.size() == 2);
  CHECK(two[0].levels == std::vector<double>{1.0, 0.0});
  REQUIRE(two[1].levels.size() == 3);
  CHECK(two[1].levels[1] == doctest::Approx(0.625).epsilon(1e-14));
  for (const auto& f : two) CHECK(f.speed == 0.0);

  CHECK(step_fronts(balanced_model_one_step()).size() == 1);
  CHECK(step_fronts(equal_ends_model()).empty());
}

TEST_CASE("admissible table and csv") {
  const AdmissibleSet s = admissible_set(bio::make_model(bio_third()));
  REQUIRE(s.table().size() == 512);
  CHECK(s.table().front().first == doctest::Approx(s.I_lo()));
  std::ostringstream os;
  write_admissible_csv(os, s, 5);
  std::string line;
  std::istringstream in(os.str());
  std::getline(in, line);
  CHECK(line == "phi_l,phi_r,P_value");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 5);
}
