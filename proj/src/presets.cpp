#include "stabcv/presets.hpp"

#include <array>
#include <string>

#include "stabcv/error.hpp"

namespace stabcv {
namespace {

IntMatrix f0_base() {
  IntMatrix b(4, 4);
  b(2, 0) = 2;
  b(1, 2) = 2;
  b(3, 1) = 2;
  b(0, 3) = 2;
  return b;
}

std::vector<Preset> make_presets() {
  std::vector<Preset> out;
  out.push_back(Preset{.name = "kronecker",
                       .base = IntMatrix{{0, 0}, {2, 0}},
                       .sequence = {0, 1},
                       .policy = TwoCyclePolicy::CancelTwoCycles,
                       .period = 2,
                       .even_permutation = {1, 0}});
  out.push_back(Preset{.name = "conifold",
                       .base = IntMatrix{{0, 2}, {2, 0}},
                       .sequence = {0, 1},
                       .policy = TwoCyclePolicy::KeepTwoCycles,
                       .period = 2,
                       .even_permutation = {1, 0}});
  out.push_back(Preset{.name = "f0",
                       .base = f0_base(),
                       .sequence = {0, 1, 2, 3},
                       .policy = TwoCyclePolicy::CancelTwoCycles,
                       .subsample_offset = 2,
                       .subsample_stride = 2,
                       .period = 2,
                       .even_permutation = {2, 3, 0, 1}});
  return out;
}

}  // namespace

MonomialSubstitution Preset::normalization() const {
  return MonomialSubstitution::rename(nvars(), even_permutation);
}

std::span<const Preset> presets() {
  static const std::vector<Preset> all = make_presets();
  return all;
}

const Preset& preset(std::string_view name) {
  for (const auto& p : presets())
    if (p.name == name) return p;
  throw InvalidInput("unknown preset '" + std::string(name) + "'");
}

MonomialSubstitution f0_folding() {
  constexpr std::array<std::size_t, 4> targets{0, 0, 1, 1};
  return MonomialSubstitution::rename(2, targets);
}

}  // namespace stabcv
