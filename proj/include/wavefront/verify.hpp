#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wavefront/config.hpp"
#include "wavefront/speed.hpp"

namespace wavefront {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool passed() const;
  /// Name of the first failing check, if any.
  std::optional<std::string> first_failure() const;
};

struct VerifyOptions {
  SpeedOptions speed;
  int sweep_n = 11;
};

/// Runs the invariant checks of every module against one model. Errors are
/// recorded as failed checks; nothing is thrown.
VerifyReport run_verify(const ModelConfig& cfg, const VerifyOptions& opts = {});

}  // namespace wavefront
