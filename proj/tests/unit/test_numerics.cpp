#include <doctest.h>

#include <charconv>
#include <cmath>
#include <sstream>

#include "wavefront/csv.hpp"
#include "wavefront/polynomial.hpp"
#include "wavefront/quadrature.hpp"
#include "wavefront/roots.hpp"

using namespace wavefront;

TEST_CASE("polynomial evaluation and calculus") {
  const Polynomial p({1.0, -2.0, 3.0});  // 1 - 2x + 3x^2
  CHECK(p(0.0) == 1.0);
  CHECK(p(2.0) == doctest::Approx(9.0));
  const Polynomial dp = p.derivative();
  CHECK(dp(1.0) == doctest::Approx(4.0));
  const Polynomial ip = p.antiderivative(5.0);
  CHECK(ip(0.0) == 5.0);
  CHECK(ip(1.0) - ip(0.0) == doctest::Approx(1.0 - 1.0 + 1.0));
  CHECK((p * Polynomial({0.0, 1.0}))(2.0) == doctest::Approx(18.0));
  CHECK((p + Polynomial({1.0}))(0.0) == doctest::Approx(2.0));
  CHECK((p * 2.0)(2.0) == doctest::Approx(18.0));
  CHECK(p.degree() == 2);
}

TEST_CASE("bisection converges to the bracketed root") {
  const double r = roots::bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-15);
  CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("sign-change scan reports brackets and exact zeros") {
  auto f = [](double x) { return (x - 0.25) * (x - 0.5); };
  const auto br = roots::scan_sign_changes(f, 0.0, 1.0, 101);
  REQUIRE(br.size() == 2);
  CHECK(br[0].first <= 0.25);
  CHECK(br[0].second >= 0.25);
  CHECK(br[1].first <= 0.5);
  CHECK(br[1].second >= 0.5);
}

TEST_CASE("monotone inversion with Newton polish") {
  roots::ScalarFn f = [](double x) { return x * x * x + x; };
  roots::ScalarFn df = [](double x) { return 3 * x * x + 1; };
  const auto x = roots::invert_increasing(f, 10.0, 0.0, 3.0, &df);
  REQUIRE(x.has_value());
  CHECK(f(*x) == doctest::Approx(10.0).epsilon(1e-15));
  CHECK_FALSE(roots::invert_increasing(f, 100.0, 0.0, 3.0, &df).has_value());
}

TEST_CASE("Gauss-Kronrod quadrature") {
  CHECK(quad::integrate([](double x) { return std::exp(x); }, 0.0, 1.0) == doctest::Approx(std::exp(1.0) - 1.0));
  // Endpoints are not evaluated: an integrable singularity yields a finite value,
  // accurate only after the caller removes the singularity by substitution.
  const double raw = quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-10);
  CHECK(std::isfinite(raw));
  CHECK(raw == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(quad::integrate([](double t) { return 2.0 * t / t; }, 0.0, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(quad::integrate([](double x) { return x; }, 1.0, 0.0) == doctest::Approx(-0.5));
  CHECK(quad::integrate([](double x) { return x; }, 0.3, 0.3) == 0.0);
  // Narrow interval with a large integrand: relative accuracy must hold.
  const double a = 1.0 - 1e-5, b = 1.0 - 0.9e-5;
  const double exact = std::log((1.0 - a) / (1.0 - b));
  CHECK(quad::integrate([](double x) { return 1.0 / (1.0 - x); }, a, b, 1e-12) ==
        doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("csv formatting round-trips doubles") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 123456789.123456789, 0.0}) {
    const std::string s = csv::format_double(x);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(back == x);
  }
  std::ostringstream os;
  csv::Writer w(os, {"a", "b"});
  w.row({1.5, 2.0});
  CHECK(os.str() == "a,b\n1.5,2\n");
}
