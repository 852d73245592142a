#include "stabcv/polynomial.hpp"

#include <algorithm>
#include <map>

#include "packed_arith.hpp"
#include "stabcv/error.hpp"

namespace stabcv {

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector::value_type ExponentVector::total_degree() const noexcept {
  value_type d = 0;
  for (auto x : e_) d += x;
  return d;
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](value_type x) { return x == 0; });
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& o) {
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

ExponentVector operator*(ExponentVector::value_type s, ExponentVector a) {
  for (auto& x : a.e_) x *= s;
  return a;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
  return std::lexicographical_compare_three_way(a.e_.begin(), a.e_.end(), b.e_.begin(),
                                                b.e_.end());
}

bool canonical_less(const ExponentVector& a, const ExponentVector& b) {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  return a < b;
}

namespace {

struct CanonicalLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return canonical_less(a, b);
  }
};

void require_same_ring(const Polynomial& p, const Polynomial& q) {
  if (p.nvars() != q.nvars()) throw VariableCountMismatch(p.nvars(), q.nvars());
}

// Below this many term pairs the hash-based schoolbook product wins.
constexpr std::size_t kPackedThreshold = 4096;

Polynomial sparse_multiply(const Polynomial& p, const Polynomial& q) {
  Polynomial::TermMap acc;
  acc.reserve(std::min<std::size_t>(p.term_count() * q.term_count(), 1u << 20));
  for (const auto& [ea, ca] : p.terms())
    for (const auto& [eb, cb] : q.terms()) {
      auto [it, inserted] = acc.try_emplace(ea + eb);
      mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  Polynomial out(p.nvars());
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) out.accumulate(e, c);
  return out;
}

// Splits p into (positive part, negated negative part).
std::pair<Polynomial, Polynomial> split_signs(const Polynomial& p) {
  Polynomial pos(p.nvars()), neg(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (sgn(c) > 0)
      pos.accumulate(e, c);
    else
      neg.accumulate(e, -c);
  }
  return {std::move(pos), std::move(neg)};
}

std::optional<Polynomial> packed_signed_multiply(const Polynomial& p, const Polynomial& q) {
  if (p.all_coefficients_positive() && q.all_coefficients_positive())
    return detail::packed_multiply(p, q);
  auto [pp, pn] = split_signs(p);
  auto [qp, qn] = split_signs(q);
  Polynomial out(p.nvars());
  auto add_product = [&](const Polynomial& a, const Polynomial& b, bool negate) -> bool {
    if (a.is_zero() || b.is_zero()) return true;
    auto prod = detail::packed_multiply(a, b);
    if (!prod) return false;
    for (const auto& [e, c] : prod->terms()) out.accumulate(e, negate ? Integer(-c) : c);
    return true;
  };
  if (!add_product(pp, qp, false) || !add_product(pn, qn, false) ||
      !add_product(pp, qn, true) || !add_product(pn, qp, true))
    return std::nullopt;
  return out;
}

// Leading-term elimination under the canonical order. The per-variable exponent
// window of any exact quotient is known in advance, which bounds the loop even for
// Laurent inputs.
Polynomial sparse_divide(const Polynomial& p, const Polynomial& q) {
  const std::size_t n = p.nvars();
  std::map<ExponentVector, Integer, CanonicalLess> rem;
  for (const auto& [e, c] : p.terms()) rem.emplace(e, c);

  const auto [pmin, pmax] = p.exponent_bounds();
  const auto [qmin, qmax] = q.exponent_bounds();
  const ExponentVector lo = pmin - qmin;
  const ExponentVector hi = pmax - qmax;

  ExponentVector qlead = q.terms().begin()->first;
  for (const auto& [e, c] : q.terms())
    if (canonical_less(qlead, e)) qlead = e;
  const Integer& qlc = q.terms().find(qlead)->second;

  Polynomial out(n);
  Integer factor;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const ExponentVector shift = top->first - qlead;
    for (std::size_t i = 0; i < n; ++i)
      if (shift[i] < lo[i] || shift[i] > hi[i])
        throw NonExactDivision("nonzero remainder in polynomial division");
    if (!mpz_divisible_p(top->second.get_mpz_t(), qlc.get_mpz_t()))
      throw NonExactDivision("leading coefficient does not divide");
    mpz_divexact(factor.get_mpz_t(), top->second.get_mpz_t(), qlc.get_mpz_t());
    out.accumulate(shift, factor);
    for (const auto& [e, c] : q.terms()) {
      auto [it, inserted] = rem.try_emplace(e + shift);
      mpz_submul(it->second.get_mpz_t(), factor.get_mpz_t(), c.get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Integer& c) {
  Polynomial p(nvars);
  p.accumulate(ExponentVector(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars)
    throw IndexOutOfRange("variable y" + std::to_string(index) + " outside ring of " +
                          std::to_string(nvars));
  ExponentVector e(nvars);
  e[index] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const ExponentVector& e, const Integer& c) {
  Polynomial p(e.size());
  p.accumulate(e, c);
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::span<const Term> terms) {
  Polynomial p(nvars);
  for (const auto& [e, c] : terms) {
    if (e.size() != nvars) throw VariableCountMismatch(nvars, e.size());
    p.accumulate(e, c);
  }
  return p;
}

Integer Polynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<Polynomial::Term> Polynomial::canonical_terms() const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return canonical_less(a.first, b.first); });
  return out;
}

void Polynomial::accumulate(const ExponentVector& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool Polynomial::all_coefficients_positive() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return sgn(t.second) > 0; });
}

std::pair<ExponentVector, ExponentVector> Polynomial::exponent_bounds() const {
  if (terms_.empty()) throw Error("exponent bounds of the zero polynomial");
  ExponentVector lo = terms_.begin()->first;
  ExponentVector hi = lo;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) {
      lo[i] = std::min(lo[i], e[i]);
      hi[i] = std::max(hi[i], e[i]);
    }
  return {lo, hi};
}

// ---------------------------------------------------------------------------
// Arithmetic

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q);
  const Polynomial& big = p.term_count() >= q.term_count() ? p : q;
  const Polynomial& small = p.term_count() >= q.term_count() ? q : p;
  Polynomial out = big;
  for (const auto& [e, c] : small.terms()) out.accumulate(e, c);
  return out;
}

Polynomial operator-(const Polynomial& p) {
  Polynomial out(p.nvars());
  out.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) out.accumulate(e, -c);
  return out;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q);
  Polynomial out = p;
  for (const auto& [e, c] : q.terms()) out.accumulate(e, -c);
  return out;
}

Polynomial operator*(const Integer& c, const Polynomial& p) {
  Polynomial out(p.nvars());
  if (c == 0) return out;
  out.reserve(p.term_count());
  for (const auto& [e, x] : p.terms()) out.accumulate(e, c * x);
  return out;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q);
  if (p.is_zero() || q.is_zero()) return Polynomial(p.nvars());
  if (p.is_monomial() || q.is_monomial()) {
    const Polynomial& mono = p.is_monomial() ? p : q;
    const Polynomial& other = p.is_monomial() ? q : p;
    const auto& [me, mc] = *mono.terms().begin();
    Polynomial out(p.nvars());
    out.reserve(other.term_count());
    for (const auto& [e, c] : other.terms()) out.accumulate(e + me, mc * c);
    return out;
  }
  if (p.term_count() * q.term_count() >= kPackedThreshold) {
    if (auto r = packed_signed_multiply(p, q)) return std::move(*r);
  }
  return sparse_multiply(p, q);
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::one(p.nvars());
  Polynomial base = p;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Polynomial div_exact(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q);
  if (q.is_zero()) throw DivisionByZero();
  if (p.is_zero()) return Polynomial(p.nvars());
  // The quotient's lowest exponent in each variable is fixed by the operands; division
  // is exact only when it is a polynomial, as leading-term elimination would find.
  const ExponentVector low = p.exponent_bounds().first - q.exponent_bounds().first;
  for (std::size_t i = 0; i < low.size(); ++i)
    if (low[i] < 0)
      throw NonExactDivision("divisor has a factor y" + std::to_string(i) + " the dividend lacks");
  if (q.is_monomial()) {
    const auto& [qe, qc] = *q.terms().begin();
    Polynomial out(p.nvars());
    out.reserve(p.term_count());
    Integer c;
    for (const auto& [e, x] : p.terms()) {
      if (!mpz_divisible_p(x.get_mpz_t(), qc.get_mpz_t()))
        throw NonExactDivision("coefficient not divisible by monomial divisor");
      mpz_divexact(c.get_mpz_t(), x.get_mpz_t(), qc.get_mpz_t());
      out.accumulate(e - qe, c);
    }
    return out;
  }
  if (p.term_count() * q.term_count() >= kPackedThreshold && p.all_coefficients_positive() &&
      q.all_coefficients_positive()) {
    Polynomial quotient(p.nvars());
    switch (detail::packed_divide(p, q, quotient)) {
      case detail::PackedDivision::Exact:
        return quotient;
      case detail::PackedDivision::NotExact:
        throw NonExactDivision("nonzero remainder in polynomial division");
      case detail::PackedDivision::Inapplicable:
        break;
    }
  }
  return sparse_divide(p, q);
}

Polynomial truncate(const Polynomial& p, std::int64_t max_total_degree) {
  Polynomial out(p.nvars());
  for (const auto& [e, c] : p.terms())
    if (e.total_degree() <= max_total_degree) out.accumulate(e, c);
  return out;
}

Polynomial map_exponents(const Polynomial& p, const IntMatrix& m) {
  if (m.cols() != p.nvars()) throw VariableCountMismatch(m.cols(), p.nvars());
  Polynomial out(m.rows());
  out.reserve(p.term_count());
  ExponentVector image(m.rows());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      ExponentVector::value_type s = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * e[j];
      image[i] = s;
    }
    out.accumulate(image, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Substitution

MonomialSubstitution::MonomialSubstitution(std::size_t target_nvars,
                                           std::vector<ExponentVector> images)
    : target_nvars_(target_nvars), images_(std::move(images)) {
  for (const auto& img : images_)
    if (img.size() != target_nvars_) throw VariableCountMismatch(target_nvars_, img.size());
}

MonomialSubstitution MonomialSubstitution::identity(std::size_t nvars) {
  std::vector<std::size_t> targets(nvars);
  for (std::size_t i = 0; i < nvars; ++i) targets[i] = i;
  return rename(nvars, targets);
}

MonomialSubstitution MonomialSubstitution::rename(std::size_t target_nvars,
                                                  std::span<const std::size_t> targets) {
  std::vector<ExponentVector> images;
  images.reserve(targets.size());
  for (auto t : targets) {
    if (t >= target_nvars) throw IndexOutOfRange("rename target y" + std::to_string(t));
    ExponentVector e(target_nvars);
    e[t] = 1;
    images.push_back(std::move(e));
  }
  return MonomialSubstitution(target_nvars, std::move(images));
}

MonomialSubstitution MonomialSubstitution::swap(std::size_t nvars, std::size_t a, std::size_t b) {
  std::vector<std::size_t> targets(nvars);
  for (std::size_t i = 0; i < nvars; ++i) targets[i] = i;
  if (a >= nvars || b >= nvars) throw IndexOutOfRange("swap index");
  std::swap(targets[a], targets[b]);
  return rename(nvars, targets);
}

IntMatrix MonomialSubstitution::matrix() const {
  IntMatrix m(target_nvars_, images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j)
    for (std::size_t i = 0; i < target_nvars_; ++i) m(i, j) = images_[j][i];
  return m;
}

MonomialSubstitution MonomialSubstitution::then(const MonomialSubstitution& next) const {
  if (next.source_nvars() != target_nvars_)
    throw VariableCountMismatch(next.source_nvars(), target_nvars_);
  std::vector<ExponentVector> images;
  images.reserve(images_.size());
  for (const auto& img : images_) {
    ExponentVector composed(next.target_nvars());
    for (std::size_t j = 0; j < img.size(); ++j) composed += img[j] * next.images_[j];
    images.push_back(std::move(composed));
  }
  return MonomialSubstitution(next.target_nvars(), std::move(images));
}

Polynomial substitute(const Polynomial& p, const MonomialSubstitution& s) {
  if (s.source_nvars() != p.nvars()) throw VariableCountMismatch(s.source_nvars(), p.nvars());
  return map_exponents(p, s.matrix());
}

}  // namespace stabcv
