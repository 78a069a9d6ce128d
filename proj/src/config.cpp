#include "wavefront/config.hpp"

#include <fstream>
#include <vector>

#include "wavefront/errors.hpp"

namespace wavefront {

namespace {

double number(const nlohmann::json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw ParamError(std::string("field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

Polynomial poly(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array() || j.at(key).empty()) {
    throw ParamError(std::string("field '") + key + "' must be a non-empty array of coefficients");
  }
  std::vector<double> c;
  for (const auto& v : j.at(key)) {
    if (!v.is_number()) throw ParamError(std::string("field '") + key + "' must contain numbers only");
    c.push_back(v.get<double>());
  }
  return Polynomial(std::move(c));
}

}  // namespace

ModelConfig parse_model_config(const nlohmann::json& j) {
  if (!j.is_object()) throw ParamError("model config must be a JSON object");
  const std::string type = j.value("type", std::string("bio"));
  ModelConfig cfg;
  if (type == "bio") {
    bio::BioParams bp;
    bp.Di = number(j, "Di", bp.Di);
    bp.Dg = number(j, "Dg", bp.Dg);
    bp.ki = number(j, "ki", bp.ki);
    bp.kg = number(j, "kg", bp.kg);
    bp.lambdai = number(j, "lambdai", bp.lambdai);
    bp.lambdag = number(j, "lambdag", bp.lambdag);
    cfg.bio = bp;
    cfg.P = bio::potential(bp);
    cfg.g = bio::reaction(bp);
  } else if (type == "custom") {
    cfg.P = poly(j, "P_poly");
    cfg.g = poly(j, "g_poly");
  } else {
    throw ParamError("unknown model type '" + type + "' (expected 'bio' or 'custom')");
  }
  return cfg;
}

ModelConfig load_model_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParamError("cannot open model file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParamError("invalid JSON in '" + path + "': " + e.what());
  }
  return parse_model_config(j);
}

ModelConfig default_model_config() { return parse_model_config(nlohmann::json{{"type", "bio"}}); }

ModelSpec build_model(const ModelConfig& cfg, const ModelOptions& opts) {
  if (cfg.bio) return bio::make_model(*cfg.bio, opts);
  return build_model(from_polynomials(cfg.P, cfg.g), opts);
}

}  // namespace wavefront
