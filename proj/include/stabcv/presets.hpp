#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stabcv/int_matrix.hpp"
#include "stabcv/polynomial.hpp"
#include "stabcv/quiver.hpp"

namespace stabcv {

/// One of the built-in case studies, with everything needed to run and compare it.
struct Preset {
  std::string name;
  IntMatrix base;                      // unframed arrow counts
  std::vector<std::size_t> sequence;   // repeated cyclically
  TwoCyclePolicy policy;
  // Subsample applied before stabilization (offset 1, stride 1 means "all steps").
  std::size_t subsample_offset = 1;
  std::size_t subsample_stride = 1;
  // Stride between compared steps when parity normalization is off.
  std::size_t period = 1;
  // Permutation applied to even-indexed (after subsampling) transformed polynomials.
  std::vector<std::size_t> even_permutation;

  std::size_t nvars() const { return base.rows(); }
  Quiver quiver() const { return Quiver::frame(base); }
  MonomialSubstitution normalization() const;
};

std::span<const Preset> presets();
/// Throws InvalidInput for unknown names.
const Preset& preset(std::string_view name);

/// The F0 -> conifold folding: y0, y1 -> y0 and y2, y3 -> y1.
MonomialSubstitution f0_folding();

}  // namespace stabcv
