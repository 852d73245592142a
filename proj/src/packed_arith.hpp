#pragma once

// Kronecker-substitution arithmetic: a polynomial with nonnegative coefficients is
// packed into one big integer (one fixed-width limb slot per point of its exponent
// box), so products and exact quotients become single GMP operations.

#include <optional>

#include "stabcv/polynomial.hpp"

namespace stabcv::detail {

/// Product of two polynomials with strictly positive coefficients, or nullopt when
/// the packed form would exceed the memory budget.
std::optional<Polynomial> packed_multiply(const Polynomial& p, const Polynomial& q);

enum class PackedDivision { Exact, NotExact, Inapplicable };

/// Exact quotient p / q for positive-coefficient operands. On Exact, `quotient` holds
/// the certified result; NotExact is a definitive answer; Inapplicable means the
/// caller must fall back to the sparse algorithm.
PackedDivision packed_divide(const Polynomial& p, const Polynomial& q, Polynomial& quotient);

}  // namespace stabcv::detail
