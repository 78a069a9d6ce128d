#include <doctest.h>

#include "wavefront/config.hpp"
#include "wavefront/errors.hpp"
#include "wavefront/verify.hpp"

using namespace wavefront;
using nlohmann::json;

TEST_CASE("bio config with defaults") {
  const ModelConfig c = parse_model_config(json{{"type", "bio"}, {"Di", 32.0}, {"Dg", 5.0}});
  REQUIRE(c.bio.has_value());
  CHECK(c.bio->Di == 32.0);
  CHECK(c.bio->ki == 3.0);
  const ModelSpec m = build_model(c);
  CHECK(m.gamma() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("custom config") {
  const ModelConfig c =
      parse_model_config(json::parse(R"({"type":"custom","P_poly":[0,0.5625,-1.5,1],"g_poly":[0,-0.5,1.5,-1]})"));
  CHECK_FALSE(c.bio.has_value());
  CHECK(build_model(c).alpha() == doctest::Approx(0.25));
}

TEST_CASE("malformed configs") {
  CHECK_THROWS_AS(parse_model_config(json::array()), ParamError);
  CHECK_THROWS_AS(parse_model_config(json{{"type", "other"}}), ParamError);
  CHECK_THROWS_AS(parse_model_config(json{{"type", "bio"}, {"Di", "x"}}), ParamError);
  CHECK_THROWS_AS(parse_model_config(json{{"type", "custom"}, {"P_poly", {1, 2}}}), ParamError);
  CHECK_THROWS_AS(load_model_config("/nonexistent/model.json"), ParamError);
  CHECK_THROWS_AS(build_model(parse_model_config(json{{"type", "bio"}, {"Di", 32.0}, {"Dg", 8.0}})), ParamError);
}

TEST_CASE("verify suite on the default model") {
  const VerifyReport r = run_verify(default_model_config());
  CHECK(r.passed());
  CHECK_FALSE(r.first_failure().has_value());
  CHECK(r.checks.size() >= 15);
}

TEST_CASE("verify reports invalid bio parameters as the first failure") {
  const VerifyReport r = run_verify(parse_model_config(json{{"type", "bio"}, {"Di", 32.0}, {"Dg", 8.0}}));
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure().value() == "bio.params");
}
