#pragma once

#include <cstdint>

#include "stabcv/polynomial.hpp"

namespace stabcv {

/// 1 + sum over (l, m) >= 0 of y0^(l+m+1) * y1^(l+m), truncated to total degree <= degree_cap.
/// Each (l, m) is a simple partition of the infinite row pyramid.
Polynomial limit_series_S(std::int64_t degree_cap);

/// Sum over simple partitions of the infinite Aztec diamond pyramid (an up-closed finite
/// set of altered rows with (l, m) weakly growing downwards) of the limit exponent,
/// truncated to total degree <= degree_cap. `colors` is 2 or 4.
Polynomial limit_series_T(std::int64_t degree_cap, int colors);

}  // namespace stabcv
