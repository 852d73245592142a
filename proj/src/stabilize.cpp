#include "stabcv/stabilize.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "stabcv/error.hpp"

namespace stabcv {

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss: every intermediate entry is itself a minor, so divisions are exact.
  std::vector<Integer> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<long>(m(i, j));
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = v;
      }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

namespace {

IntMatrix minor_without(const IntMatrix& m, std::size_t row, std::size_t col) {
  const std::size_t n = m.rows();
  IntMatrix out(n - 1, n - 1);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw Error("matrix entry exceeds 64 bits");
  return v.get_si();
}

}  // namespace

IntMatrix invert_unimodular(const IntMatrix& m) {
  const Integer det = determinant(m);
  if (abs(det) != 1) throw NotUnimodular(det);
  const std::size_t n = m.rows();
  IntMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = to_int64(det);
    return inv;
  }
  // inverse = adjugate / det, and det is its own reciprocal here.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer cofactor = determinant(minor_without(m, j, i));
      if ((i + j) % 2 == 1) cofactor = -cofactor;
      inv(i, j) = to_int64(cofactor * det);
    }
  return inv;
}

Polynomial transform_polynomial(const Polynomial& f, const IntMatrix& c) {
  if (c.rows() != f.nvars()) throw VariableCountMismatch(c.rows(), f.nvars());
  const Polynomial out = map_exponents(f, invert_unimodular(c));
  // An invertible linear map is injective on exponents, so no terms may merge.
  if (out.term_count() != f.term_count())
    throw Error("C-matrix transformation merged terms; matrix is not invertible");
  return out;
}

Polynomial normalize_parity(const Polynomial& f, std::size_t k,
                            const MonomialSubstitution& permutation, Parity parity) {
  const bool is_even = k % 2 == 0;
  if (is_even != (parity == Parity::Even)) return f;
  return substitute(f, permutation);
}

Polynomial stable_cluster_variable(const MutationTrace& trace, std::size_t k,
                                   const std::optional<Normalization>& normalization,
                                   std::optional<std::int64_t> degree_cap) {
  const StepRecord& rec = trace[k];
  IntMatrix map = invert_unimodular(rec.c);
  if (normalization) {
    const bool is_even = k % 2 == 0;
    if (is_even == (normalization->parity == Parity::Even))
      map = normalization->permutation.matrix() * map;
  }
  // Fused transform-and-truncate: F_k can be far larger than its low-degree image.
  const std::size_t n = map.rows();
  const std::int64_t cap = degree_cap.value_or(std::numeric_limits<std::int64_t>::max());
  Polynomial out(n);
  ExponentVector image(n);
  for (const auto& [e, c] : rec.f.terms()) {
    std::int64_t degree = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < map.cols(); ++j) s += map(i, j) * e[j];
      image[i] = s;
      degree += s;
    }
    if (degree <= cap) out.accumulate(image, c);
  }
  return out;
}

Polynomial StableReport::series() const {
  Polynomial p(nvars);
  for (const auto& t : terms) p.accumulate(t.exponent, t.coefficient);
  return p;
}

const StableTerm* StableReport::find(const ExponentVector& e) const {
  for (const auto& t : terms)
    if (t.exponent == e) return &t;
  return nullptr;
}

StableReport stable_series(const MutationTrace& trace, const StableSeriesOptions& options) {
  if (options.period < 1) throw InvalidInput("period must be at least 1");
  if (options.window < 2) throw InvalidInput("window must be at least 2");
  const std::size_t horizon = trace.steps();
  const std::size_t needed = (options.window - 1) * options.period + 1;
  if (horizon < needed)
    throw InsufficientTrace("stabilization needs " + std::to_string(needed) +
                            " steps, trace has " + std::to_string(horizon));

  std::vector<Polynomial> transformed;
  transformed.reserve(horizon + 1);
  transformed.emplace_back(trace.nvars());
  for (std::size_t k = 1; k <= horizon; ++k)
    transformed.push_back(
        stable_cluster_variable(trace, k, options.normalization, options.degree_cap));

  struct Candidate {
    Integer coefficient;
    std::size_t first;
    bool conflict = false;
  };
  absl::flat_hash_map<ExponentVector, Candidate> found;

  for (std::size_t last = horizon; last + options.period > horizon && last >= 1; --last) {
    for (const auto& [e, c] : transformed[last].terms()) {
      std::size_t first = last;
      std::size_t run = 1;
      while (first > options.period && transformed[first - options.period].coefficient(e) == c) {
        first -= options.period;
        ++run;
      }
      if (run < options.window) continue;
      auto [it, inserted] = found.try_emplace(e, Candidate{c, first});
      if (inserted) continue;
      if (it->second.coefficient != c)
        it->second.conflict = true;
      else
        it->second.first = std::min(it->second.first, first);
    }
  }

  StableReport report{.degree_cap = options.degree_cap,
                      .period = options.period,
                      .window = options.window,
                      .horizon = horizon,
                      .nvars = trace.nvars(),
                      .terms = {}};
  for (auto& [e, cand] : found)
    if (!cand.conflict) report.terms.push_back(StableTerm{e, cand.coefficient, cand.first});
  std::sort(report.terms.begin(), report.terms.end(), [](const StableTerm& a, const StableTerm& b) {
    return canonical_less(a.exponent, b.exponent);
  });
  return report;
}

Polynomial kronecker_limit(std::int64_t degree_cap) {
  Polynomial p(2);
  if (degree_cap < 0) return p;
  p.accumulate(ExponentVector{0, 0}, 1);
  for (std::int64_t i = 1; 2 * i - 1 <= degree_cap; ++i) p.accumulate(ExponentVector{i, i - 1}, i);
  return p;
}

}  // namespace stabcv
