#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>
#include <absl/container/inlined_vector.h>
#include <gmpxx.h>

#include "stabcv/int_matrix.hpp"

namespace stabcv {

using Integer = mpz_class;

/// Exponents of a Laurent monomial y0^e0 * y1^e1 * ... ; entries may be negative.
class ExponentVector {
 public:
  using value_type = std::int64_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t nvars) : e_(nvars, 0) {}
  ExponentVector(std::initializer_list<value_type> init) : e_(init) {}
  explicit ExponentVector(std::span<const value_type> init) : e_(init.begin(), init.end()) {}

  std::size_t size() const noexcept { return e_.size(); }
  value_type& operator[](std::size_t i) { return e_[i]; }
  value_type operator[](std::size_t i) const { return e_[i]; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }
  std::span<const value_type> view() const noexcept { return {e_.data(), e_.size()}; }

  value_type total_degree() const noexcept;
  bool is_zero() const noexcept;

  ExponentVector& operator+=(const ExponentVector& o);
  ExponentVector& operator-=(const ExponentVector& o);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  friend ExponentVector operator*(value_type s, ExponentVector a);

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) { return a.e_ == b.e_; }
  /// Plain lexicographic comparison.
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);

  template <typename H>
  friend H AbslHashValue(H h, const ExponentVector& v) {
    return H::combine(std::move(h), v.e_);
  }

 private:
  absl::InlinedVector<value_type, 4> e_;
};

/// Canonical monomial order: total degree first, then lexicographic.
bool canonical_less(const ExponentVector& a, const ExponentVector& b);

/// Sparse Laurent polynomial in a fixed number of variables with integer coefficients.
///
/// No stored coefficient is ever zero, so two polynomials are equal exactly when
/// their term maps are. Terms are kept unordered; canonical_terms() sorts on demand.
class Polynomial {
 public:
  using TermMap = absl::flat_hash_map<ExponentVector, Integer>;
  using Term = std::pair<ExponentVector, Integer>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Integer& c);
  static Polynomial one(std::size_t nvars) { return constant(nvars, 1); }
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const ExponentVector& e, const Integer& c = 1);
  /// Sums coefficients of repeated exponents; every exponent must have length nvars.
  static Polynomial from_terms(std::size_t nvars, std::span<const Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Coefficient of y^e, zero when absent.
  Integer coefficient(const ExponentVector& e) const;
  const TermMap& terms() const noexcept { return terms_; }
  std::vector<Term> canonical_terms() const;

  /// Adds c * y^e in place, dropping the term if it cancels.
  void accumulate(const ExponentVector& e, const Integer& c);
  void reserve(std::size_t n) { terms_.reserve(n); }

  bool all_coefficients_positive() const;
  /// Per-variable minimum and maximum exponent; the polynomial must be nonzero.
  std::pair<ExponentVector, ExponentVector> exponent_bounds() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Integer& c, const Polynomial& p);

Polynomial pow(const Polynomial& p, unsigned exponent);

/// Returns the polynomial r (no negative exponents) with r * q == p. Throws
/// NonExactDivision if there is none; operands themselves may be Laurent.
Polynomial div_exact(const Polynomial& p, const Polynomial& q);

/// Keeps the terms of total degree at most max_total_degree.
Polynomial truncate(const Polynomial& p, std::int64_t max_total_degree);

/// Applies the linear map e -> M * e to every exponent vector (M has target_nvars rows).
/// Terms whose images collide are summed.
Polynomial map_exponents(const Polynomial& p, const IntMatrix& m);

/// A ring homomorphism sending each source variable to a monomial of the target ring.
class MonomialSubstitution {
 public:
  MonomialSubstitution(std::size_t target_nvars, std::vector<ExponentVector> images);

  static MonomialSubstitution identity(std::size_t nvars);
  /// Sends y_i to y_{targets[i]}.
  static MonomialSubstitution rename(std::size_t target_nvars, std::span<const std::size_t> targets);
  static MonomialSubstitution swap(std::size_t nvars, std::size_t a, std::size_t b);

  std::size_t source_nvars() const noexcept { return images_.size(); }
  std::size_t target_nvars() const noexcept { return target_nvars_; }
  const std::vector<ExponentVector>& images() const noexcept { return images_; }

  /// Column i holds the image exponent vector of y_i.
  IntMatrix matrix() const;

  /// The substitution "apply this, then next".
  MonomialSubstitution then(const MonomialSubstitution& next) const;

  friend bool operator==(const MonomialSubstitution&, const MonomialSubstitution&) = default;

 private:
  std::size_t target_nvars_;
  std::vector<ExponentVector> images_;
};

Polynomial substitute(const Polynomial& p, const MonomialSubstitution& s);

/// `c*y0^e0*y1^e1*...` terms joined by " + " in canonical order; "0" for zero.
std::string canonical_text(const Polynomial& p);

/// Parses canonical text (and any reordering of it, with '-' allowed). Throws ParseError.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars);

}  // namespace stabcv
