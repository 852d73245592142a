#include "packed_arith.hpp"

#include <algorithm>
#include <cstring>
#include <limits>

static_assert(GMP_NAIL_BITS == 0, "packed arithmetic assumes nail-free limbs");

namespace stabcv::detail {
namespace {

// Upper limit on the limb count of any packed operand or result (512 MiB).
constexpr std::size_t kMaxLimbs = std::size_t{1} << 26;

struct Box {
  ExponentVector shift;
  std::vector<std::size_t> extent;  // slots per variable
  std::vector<std::size_t> stride;
  std::size_t slots = 1;
};

// Fills stride/slots from extent; false if the slot count overflows the budget.
bool finish_box(Box& box, std::size_t limbs_per_slot) {
  const std::size_t n = box.extent.size();
  box.stride.assign(n, 1);
  unsigned __int128 slots = 1;
  for (std::size_t i = 0; i < n; ++i) {
    box.stride[i] = static_cast<std::size_t>(slots);
    slots *= box.extent[i];
    if (slots * limbs_per_slot > kMaxLimbs) return false;
  }
  box.slots = static_cast<std::size_t>(slots);
  return true;
}

std::size_t slot_of(const ExponentVector& e, const ExponentVector& shift, const Box& box) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    idx += static_cast<std::size_t>(e[i] - shift[i]) * box.stride[i];
  return idx;
}

std::size_t bit_length(const Integer& c) { return mpz_sizeinbase(c.get_mpz_t(), 2); }

std::size_t max_coefficient_bits(const Polynomial& p) {
  std::size_t bits = 0;
  for (const auto& [e, c] : p.terms()) bits = std::max(bits, bit_length(c));
  return bits;
}

// Packs p (exponents offset by `shift`) into `out` using `slots` slots of `limbs` limbs.
void pack(Integer& out, const Polynomial& p, const ExponentVector& shift, const Box& box,
          std::size_t limbs, std::size_t slots) {
  mpz_ptr z = out.get_mpz_t();
  mp_limb_t* dst = mpz_limbs_write(z, static_cast<mp_size_t>(slots * limbs));
  std::memset(dst, 0, slots * limbs * sizeof(mp_limb_t));
  for (const auto& [e, c] : p.terms()) {
    const std::size_t idx = slot_of(e, shift, box);
    const mpz_srcptr cz = c.get_mpz_t();
    const std::size_t n = mpz_size(cz);
    std::memcpy(dst + idx * limbs, mpz_limbs_read(cz), n * sizeof(mp_limb_t));
  }
  mpz_limbs_finish(z, static_cast<mp_size_t>(slots * limbs));
}

// Inverse of pack. Returns false if any digit would land outside the box.
bool unpack(const Integer& packed, const ExponentVector& shift, const Box& box, std::size_t limbs,
            Polynomial& out) {
  const mpz_srcptr z = packed.get_mpz_t();
  const mp_limb_t* src = mpz_limbs_read(z);
  const std::size_t total = mpz_size(z);
  const std::size_t n = shift.size();
  const std::size_t used_slots = (total + limbs - 1) / limbs;
  if (used_slots > box.slots) return false;
  ExponentVector e(n);
  Integer c;
  for (std::size_t s = 0; s < used_slots; ++s) {
    const std::size_t lo = s * limbs;
    std::size_t hi = std::min(lo + limbs, total);
    while (hi > lo && src[hi - 1] == 0) --hi;
    if (hi == lo) continue;
    mpz_ptr cz = c.get_mpz_t();
    mp_limb_t* cd = mpz_limbs_write(cz, static_cast<mp_size_t>(hi - lo));
    std::memcpy(cd, src + lo, (hi - lo) * sizeof(mp_limb_t));
    mpz_limbs_finish(cz, static_cast<mp_size_t>(hi - lo));
    std::size_t rem = s;
    for (std::size_t i = n; i-- > 0;) {
      e[i] = static_cast<ExponentVector::value_type>(rem / box.stride[i]) + shift[i];
      rem %= box.stride[i];
    }
    out.accumulate(e, c);
  }
  return true;
}

// A unimodular change of exponent coordinates, kept as its matrix and inverse.
struct Coordinates {
  IntMatrix forward;
  IntMatrix inverse;
};

std::int64_t extent_after_shear(const std::vector<std::int64_t>& pts, std::size_t n,
                                std::size_t target, std::size_t source, std::int64_t factor) {
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (std::size_t k = 0; k < pts.size(); k += n) {
    const std::int64_t v = pts[k + target] - factor * pts[k + source];
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

// F-polynomial supports are thin slabs along a skew direction, so their axis-aligned
// box is mostly empty. Greedy integer shears x_t -= s * x_u (each one minimizing the
// extent of x_t, which is convex in s) act as a cheap lattice reduction.
std::optional<Coordinates> compact_coordinates(const Polynomial& p, const Polynomial& q) {
  const std::size_t n = p.nvars();
  if (n < 2) return std::nullopt;
  std::vector<std::int64_t> pts;
  pts.reserve((p.term_count() + q.term_count()) * n);
  for (const Polynomial* poly : {&p, &q})
    for (const auto& [e, c] : poly->terms()) pts.insert(pts.end(), e.begin(), e.end());

  IntMatrix forward = IntMatrix::identity(n);
  IntMatrix inverse = IntMatrix::identity(n);
  bool changed = false;
  for (int round = 0; round < 16; ++round) {
    bool improved = false;
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t u = 0; u < n; ++u) {
        if (t == u) continue;
        std::int64_t best = 0;
        std::int64_t best_extent = extent_after_shear(pts, n, t, u, 0);
        for (std::int64_t dir : {1, -1}) {
          std::int64_t s = dir;
          while (true) {
            const std::int64_t ext = extent_after_shear(pts, n, t, u, s);
            if (ext >= best_extent) break;
            best = s;
            best_extent = ext;
            s += dir;
          }
          if (best != 0) break;
        }
        if (best == 0) continue;
        for (std::size_t k = 0; k < pts.size(); k += n) pts[k + t] -= best * pts[k + u];
        // forward: row_t -= s * row_u; inverse: column_u += s * column_t.
        for (std::size_t j = 0; j < n; ++j) forward(t, j) -= best * forward(u, j);
        for (std::size_t i = 0; i < n; ++i) inverse(i, u) += best * inverse(i, t);
        improved = changed = true;
      }
    if (!improved) break;
  }
  if (!changed) return std::nullopt;
  return Coordinates{std::move(forward), std::move(inverse)};
}

// Worth reducing when the box is much larger than the terms it holds.
bool sparse_in_box(const Polynomial& p) {
  if (p.term_count() < 256) return false;
  const auto [lo, hi] = p.exponent_bounds();
  double volume = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) volume *= static_cast<double>(hi[i] - lo[i] + 1);
  return volume > 4.0 * static_cast<double>(p.term_count());
}

std::optional<Polynomial> multiply_in_box(const Polynomial& p, const Polynomial& q);
PackedDivision divide_in_box(const Polynomial& p, const Polynomial& q, Polynomial& quotient);

}  // namespace

std::optional<Polynomial> packed_multiply(const Polynomial& p, const Polynomial& q) {
  if (sparse_in_box(p) || sparse_in_box(q)) {
    if (auto coords = compact_coordinates(p, q)) {
      const Polynomial pt = map_exponents(p, coords->forward);
      auto r = &p == &q ? multiply_in_box(pt, pt)
                        : multiply_in_box(pt, map_exponents(q, coords->forward));
      if (!r) return std::nullopt;
      return map_exponents(*r, coords->inverse);
    }
  }
  return multiply_in_box(p, q);
}

PackedDivision packed_divide(const Polynomial& p, const Polynomial& q, Polynomial& quotient) {
  if (sparse_in_box(p)) {
    if (auto coords = compact_coordinates(p, q)) {
      Polynomial qt(p.nvars());
      const PackedDivision result = divide_in_box(map_exponents(p, coords->forward),
                                                  map_exponents(q, coords->forward), qt);
      if (result == PackedDivision::Exact) quotient = map_exponents(qt, coords->inverse);
      return result;
    }
  }
  return divide_in_box(p, q, quotient);
}

namespace {

std::optional<Polynomial> multiply_in_box(const Polynomial& p, const Polynomial& q) {
  const std::size_t n = p.nvars();
  const auto [pmin, pmax] = p.exponent_bounds();
  const auto [qmin, qmax] = q.exponent_bounds();

  const std::size_t coeff_bits = max_coefficient_bits(p) + max_coefficient_bits(q) +
                                 bit_length(Integer(std::min(p.term_count(), q.term_count()))) + 1;
  const std::size_t limbs = (coeff_bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;

  Box box;
  box.shift = pmin + qmin;
  box.extent.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    box.extent[i] = static_cast<std::size_t>((pmax[i] - pmin[i]) + (qmax[i] - qmin[i]) + 1);
  if (!finish_box(box, limbs)) return std::nullopt;

  // Operands use the product's strides, so each needs only the slots up to its top corner.
  const std::size_t p_slots = slot_of(pmax, pmin, box) + 1;
  const std::size_t q_slots = slot_of(qmax, qmin, box) + 1;

  Integer a, b, r;
  pack(a, p, pmin, box, limbs, p_slots);
  if (&p == &q) {
    mpz_mul(r.get_mpz_t(), a.get_mpz_t(), a.get_mpz_t());
  } else {
    pack(b, q, qmin, box, limbs, q_slots);
    mpz_mul(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  a = 0;
  b = 0;

  Polynomial out(n);
  out.reserve(std::min<std::size_t>(box.slots, p.term_count() * q.term_count()));
  unpack(r, box.shift, box, limbs, out);
  return out;
}

// One attempt at a given slot width. The width only has to hold p's coefficients for
// NotExact to be conclusive; certification then decides whether it was wide enough.
PackedDivision divide_with_width(const Polynomial& p, const Polynomial& q, std::size_t limbs,
                                 const Integer& q_norm, Polynomial& quotient,
                                 std::size_t& needed_bits) {
  const std::size_t n = p.nvars();
  const auto [pmin, pmax] = p.exponent_bounds();
  const auto [qmin, qmax] = q.exponent_bounds();

  Box box;
  box.shift = pmin;
  box.extent.resize(n);
  for (std::size_t i = 0; i < n; ++i) box.extent[i] = static_cast<std::size_t>(pmax[i] - pmin[i] + 1);
  if (!finish_box(box, limbs)) return PackedDivision::Inapplicable;

  Integer a, b, quo, rem;
  pack(a, p, pmin, box, limbs, box.slots);
  pack(b, q, qmin, box, limbs, slot_of(qmax, qmin, box) + 1);
  mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  // Kronecker substitution is a ring homomorphism, so an exact polynomial quotient
  // forces an exact integer quotient.
  if (rem != 0) return PackedDivision::NotExact;
  a = 0;

  const ExponentVector qshift = pmin - qmin;
  Polynomial candidate(n);
  if (!unpack(quo, qshift, box, limbs, candidate)) return PackedDivision::Inapplicable;

  // Certify: no slot of q * candidate may carry or wrap, so the integer identity
  // lifts back to a polynomial identity.
  std::size_t max_bits = 0;
  for (const auto& [e, c] : candidate.terms()) {
    max_bits = std::max(max_bits, bit_length(c));
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] + qmax[i] > pmax[i]) return PackedDivision::Inapplicable;
  }
  needed_bits = max_bits + bit_length(q_norm) + 1;
  if (needed_bits > limbs * GMP_NUMB_BITS) return PackedDivision::Inapplicable;

  quotient = std::move(candidate);
  return PackedDivision::Exact;
}

PackedDivision divide_in_box(const Polynomial& p, const Polynomial& q, Polynomial& quotient) {
  const std::size_t n = p.nvars();
  const auto [pmin, pmax] = p.exponent_bounds();
  const auto [qmin, qmax] = q.exponent_bounds();
  // The Newton polytope of p is the Minkowski sum of those of q and the quotient.
  for (std::size_t i = 0; i < n; ++i)
    if (qmax[i] - qmin[i] > pmax[i] - pmin[i]) return PackedDivision::NotExact;

  Integer q_norm = 0;
  for (const auto& [e, c] : q.terms()) q_norm += c;
  auto limbs_for = [](std::size_t bits) { return (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS; };

  // A quotient with nonnegative coefficients times q (constant term 1 for F-polynomials)
  // rarely needs much more room than p itself, so try a tight width first.
  const std::size_t p_bits = max_coefficient_bits(p) + 1;
  const std::size_t tight = limbs_for(p_bits + 8);
  std::size_t needed = 0;
  const PackedDivision first = divide_with_width(p, q, tight, q_norm, quotient, needed);
  if (first != PackedDivision::Inapplicable || needed == 0) return first;
  const std::size_t wide = std::max(limbs_for(needed), limbs_for(p_bits + bit_length(q_norm)));
  if (wide <= tight) return PackedDivision::Inapplicable;
  return divide_with_width(p, q, wide, q_norm, quotient, needed);
}

}  // namespace

}  // namespace stabcv::detail
