#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stabcv/engine.hpp"
#include "stabcv/int_matrix.hpp"
#include "stabcv/polynomial.hpp"

namespace stabcv {

/// Exact determinant (fraction-free elimination).
Integer determinant(const IntMatrix& m);

/// Integer inverse of a matrix with determinant +1 or -1; throws NotUnimodular otherwise.
IntMatrix invert_unimodular(const IntMatrix& m);

/// Replaces each exponent vector a of f by C^{-1} a.
Polynomial transform_polynomial(const Polynomial& f, const IntMatrix& c);

enum class Parity { Even, Odd };

/// Applies `permutation` when k has the given parity, otherwise returns f unchanged.
Polynomial normalize_parity(const Polynomial& f, std::size_t k,
                            const MonomialSubstitution& permutation, Parity parity);

/// Optional parity normalization applied to every transformed polynomial.
struct Normalization {
  MonomialSubstitution permutation;
  Parity parity = Parity::Even;
};

struct StableTerm {
  ExponentVector exponent;
  Integer coefficient;
  std::size_t first_stable_step = 0;
};

struct StableReport {
  std::int64_t degree_cap = 0;
  std::size_t period = 1;
  std::size_t window = 2;
  std::size_t horizon = 0;
  std::size_t nvars = 0;
  std::vector<StableTerm> terms;  // canonical order

  /// The stable terms as a polynomial.
  Polynomial series() const;
  /// The stable term at e, if any.
  const StableTerm* find(const ExponentVector& e) const;
};

struct StableSeriesOptions {
  std::size_t period = 1;
  std::size_t window = 3;
  std::int64_t degree_cap = 8;
  std::optional<Normalization> normalization;
};

/// Transformed (and optionally normalized) polynomial of trace record k, truncated.
Polynomial stable_cluster_variable(const MutationTrace& trace, std::size_t k,
                                   const std::optional<Normalization>& normalization,
                                   std::optional<std::int64_t> degree_cap = std::nullopt);

/// Finds the terms of degree <= degree_cap whose coefficient is constant and nonzero over
/// the last `window` or more same-residue steps (mod period) of the trace.
///
/// Steps 1..K are examined. For each residue class the constant run must end at the last
/// step of that class; first_stable_step is where the run begins. A term stable in more
/// than one residue class with differing coefficients is not reported.
StableReport stable_series(const MutationTrace& trace, const StableSeriesOptions& options);

/// 1 + sum_{i >= 1} i * y0^i * y1^(i-1), truncated to total degree <= degree_cap.
Polynomial kronecker_limit(std::int64_t degree_cap);

}  // namespace stabcv
