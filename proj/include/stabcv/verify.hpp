#pragma once

#include <string>
#include <vector>

#include "stabcv/presets.hpp"
#include "stabcv/quiver.hpp"

namespace stabcv {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The invariant suite of a preset, up to reindexed step max_k.
std::vector<CheckResult> verify_preset(const Preset& preset, std::size_t max_k);

/// Checks that hold for any framed quiver: F-polynomial shape, unimodular C-matrices and
/// mutation being an involution at every step.
std::vector<CheckResult> verify_quiver(const Quiver& quiver, std::span<const std::size_t> sequence,
                                       TwoCyclePolicy policy, std::size_t steps);

}  // namespace stabcv
