#pragma once

#include <random>

#include <stabcv/int_matrix.hpp>
#include <stabcv/quiver.hpp>

namespace gen {

using stabcv::IntMatrix;
using stabcv::Quiver;

// A random 2-cycle-free base with up to 3 arrows per pair, framed, then moved away from
// the initial seed by a few random mutations.
inline Quiver random_quiver(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::uniform_int_distribution<int> count(0, 3), dir(0, 1), steps(0, 4);
  const std::size_t n = size(rng);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int c = count(rng);
      if (dir(rng)) a(i, j) = c;
      else a(j, i) = c;
    }
  Quiver q = Quiver::frame(a);
  std::uniform_int_distribution<std::size_t> v(0, n - 1);
  for (int s = steps(rng); s > 0; --s) q = q.mutate(v(rng), stabcv::TwoCyclePolicy::CancelTwoCycles);
  return q;
}

// Random unimodular matrix as a product of elementary row operations and a sign flip.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix m = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<std::int64_t> factor(-2, 2);
  for (int s = 0; s < 6; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const std::int64_t f = factor(rng);
    for (std::size_t c = 0; c < n; ++c) m(i, c) += f * m(j, c);
  }
  if (factor(rng) < 0)
    for (std::size_t c = 0; c < n; ++c) m(0, c) = -m(0, c);
  return m;
}

}  // namespace gen
