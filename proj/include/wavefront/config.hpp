#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "wavefront/biomodel.hpp"
#include "wavefront/model.hpp"
#include "wavefront/polynomial.hpp"

namespace wavefront {

/// Model file contents. Two shapes are accepted:
///   {"type": "bio", "Di": .., "Dg": .., "ki": .., "lambdai": .., "lambdag": .., "kg": ..}
///   {"type": "custom", "P_poly": [p0, p1, ...], "g_poly": [g0, g1, ...]}
/// Polynomial coefficients are in ascending powers; missing bio fields take
/// the BioParams defaults.
struct ModelConfig {
  std::optional<bio::BioParams> bio;
  Polynomial P;
  Polynomial g;
};

/// Throws ParamError on malformed input.
ModelConfig parse_model_config(const nlohmann::json& j);
ModelConfig load_model_config(const std::string& path);

/// Default bio configuration (Di = 35, Dg = 8, ki = 3, lambdai = lambdag = 1, kg = 0).
ModelConfig default_model_config();

/// Validates bio parameters first, then builds the generic model.
ModelSpec build_model(const ModelConfig& cfg, const ModelOptions& opts = {});

}  // namespace wavefront
