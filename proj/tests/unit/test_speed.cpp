#include <doctest.h>

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <sstream>

#include "test_models.hpp"
#include "wavefront/errors.hpp"
#include "wavefront/speed.hpp"

using namespace wavefront;
using namespace wavefront::testing;

TEST_CASE("F is strictly increasing in c and in phi_l") {
  const AdmissibleSet s = admissible_set(bio::make_model(bio_third()));
  const double mid = 0.5 * (s.I_lo() + s.I_hi());
  double prev = -INFINITY;
  for (int i = 0; i < 20; ++i) {
    const double f = F(s, -8.0 + 0.6 * i, mid);
    CHECK(f > prev + 1e-10);
    prev = f;
  }
  prev = -INFINITY;
  for (int i = 1; i < 10; ++i) {
    const double f = F(s, -1.6, s.I_lo() + (s.I_hi() - s.I_lo()) * i / 10.0);
    CHECK(f > prev);
    prev = f;
  }
}

TEST_CASE("speed at the midpoint: toms748 oracle and tolerance refinement") {
  const AdmissibleSet s = admissible_set(bio::make_model(bio_third()));
  const double mid = 0.5 * (s.I_lo() + s.I_hi());
  const SpeedResult r = solve_speed(s, mid);
  CHECK(r.trusted);
  CHECK(r.bracket.second - r.bracket.first <= 1e-9);
  CHECK(r.consistency_defect <= 1e-6);
  CHECK(r.phi_r == doctest::Approx(s.eta(mid)));

  // Independent root finder on the same functional.
  boost::uintmax_t iters = 200;
  const auto br = boost::math::tools::toms748_solve([&](double c) { return F(s, c, mid); }, -5.0, 5.0,
                                                    boost::math::tools::eps_tolerance<double>(40), iters);
  CHECK(r.c_star == doctest::Approx(0.5 * (br.first + br.second)).epsilon(1e-8));

  // Halved ODE tolerances and ten times finer bisection.
  SpeedOptions fine;
  fine.tol_c = 1e-10;
  fine.z.rtol = 5e-11;
  fine.z.atol = 5e-13;
  CHECK(std::abs(solve_speed(s, mid, fine).c_star - r.c_star) <= 1e-7);
}

TEST_CASE("jump-function sign cases at the ends of I") {
  const AdmissibleSet s = admissible_set(equal_ends_model());
  for (double c : {-2.0, -1.0, 0.0}) CHECK(F(s, c, 0.0) < 0.0);
  for (double c : {0.0, 1.0, 2.0}) CHECK(F(s, c, s.I_hi()) > 0.0);
  CHECK(solve_speed(s, 0.0).c_star > 0.0);
  CHECK(solve_speed(s, s.I_hi()).c_star < 0.0);
}

TEST_CASE("speeds decrease along I and stay inside the bio interval") {
  const auto bp = bio_third();
  const AdmissibleSet s = admissible_set(bio::make_model(bp));
  const auto rows = sweep(s, 11);
  CHECK_FALSE(first_monotonicity_violation(rows).has_value());
  const auto [lo, hi] = bio::speed_interval(bp);
  for (const auto& row : rows) {
    REQUIRE(row.result.has_value());
    CHECK(row.result->c_star > lo);
    CHECK(row.result->c_star < hi);
    CHECK(row.result->consistency_defect <= 1e-6);
  }
}

TEST_CASE("serial and parallel sweeps are identical") {
  const AdmissibleSet s = admissible_set(bio::make_model(bio_two_thirds()));
  const auto a = sweep(s, 9, {}, Execution::Serial);
  const auto b = sweep(s, 9, {}, Execution::Parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].result.has_value());
    REQUIRE(b[i].result.has_value());
    CHECK(a[i].result->c_star == b[i].result->c_star);
    CHECK(a[i].result->z_l == b[i].result->z_l);
  }
}

TEST_CASE("sweep with two points covers the endpoints") {
  const AdmissibleSet s = admissible_set(bio::make_model(bio_third()));
  const auto rows = sweep(s, 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].phi_l == s.I_lo());
  CHECK(rows[1].phi_l == s.I_hi());
  CHECK(rows[0].result->c_star > rows[1].result->c_star);
  CHECK_THROWS_AS(sweep_grid(s, 1), DomainError);
}

TEST_CASE("monotonicity violation detection") {
  std::vector<SweepRow> rows(3);
  for (int i = 0; i < 3; ++i) {
    rows[i].result = SpeedResult{};
    rows[i].result->c_star = -static_cast<double>(i);
  }
  CHECK_FALSE(first_monotonicity_violation(rows).has_value());
  rows[2].result->c_star = -1.0;
  CHECK(first_monotonicity_violation(rows).value() == 2);
}

TEST_CASE("bracket failure and domain errors") {
  const AdmissibleSet s = admissible_set(bio::make_model(bio_third()));
  SpeedOptions tiny;
  tiny.c_max = 0.5;
  CHECK_THROWS_AS(solve_speed(s, 0.5, tiny), BracketFailure);
  CHECK_THROWS_AS(solve_speed(s, 0.2), DomainError);
  const auto rows = sweep(s, 3, tiny, Execution::Serial);
  for (const auto& r : rows) CHECK(r.bracket_failure);
}

TEST_CASE("sweep csv") {
  const AdmissibleSet s = admissible_set(bio::make_model(bio_third()));
  std::ostringstream os;
  write_sweep_csv(os, sweep(s, 3));
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "phi_l,phi_r,c_star,z_l,z_r,F_residual");
}

TEST_CASE("analytic speed bounds") {
  const auto bp = bio_third();
  const ModelSpec m = bio::make_model(bp);
  const SpeedBounds b = speed_bounds(m);
  CHECK(b.c_minus < b.c_plus);
  CHECK(b.c_plus <= 2.0 * std::sqrt(bp.lambdag * bp.Dg));
  CHECK(b.c_minus <= -2.0 * std::sqrt(m.g(m.alpha()) * m.dD(m.alpha())) + 1e-12);

  const AdmissibleSet s = admissible_set(m);
  for (const auto& row : sweep(s, 5)) {
    CHECK(row.result->c_star > b.c_minus);
    CHECK(row.result->c_star < b.c_plus);
  }

  BoundsOptions serial;
  serial.exec = Execution::Serial;
  const SpeedBounds bs = speed_bounds(m, serial);
  CHECK(bs.c_plus == b.c_plus);
  CHECK(bs.c_minus == b.c_minus);
}

TEST_CASE("speed bounds scale with the square root of g") {
  const Polynomial P = bio::potential(bio_third());
  const Polynomial g = bio::reaction(bio_third());
  const SpeedBounds b1 = speed_bounds(build_model(from_polynomials(P, g)));
  const SpeedBounds b4 = speed_bounds(build_model(from_polynomials(P, g * 4.0)));
  CHECK(b4.c_plus == doctest::Approx(2.0 * b1.c_plus).epsilon(1e-9));
  CHECK(b4.c_minus == doctest::Approx(2.0 * b1.c_minus).epsilon(1e-9));
}

TEST_CASE("averaged integral: limit at the band edge and a direct quadrature oracle") {
  const ModelSpec m = bio::make_model(bio_third());
  CHECK(averaged_upper(m, m.beta() + 1e-9) == doctest::Approx(m.g(m.beta()) * m.dD(m.beta())).epsilon(1e-6));
  // Direct integration in sigma without substitution; the integrand is bounded.
  const double phi = 0.9;
  double sum = 0.0;
  const int n = 200000;
  const double h = (phi - m.beta()) / n;
  for (int i = 0; i < n; ++i) {
    const double s = m.beta() + (i + 0.5) * h;
    sum += m.g(s) * m.D(s) / (s - m.beta()) * h;
  }
  CHECK(averaged_upper(m, phi) == doctest::Approx(sum / (phi - m.beta())).epsilon(1e-8));
}

TEST_CASE("speed bounds preconditions") {
  CHECK_THROWS_AS(speed_bounds(bio::make_model(bio_two_thirds())), PreconditionError);
}
