#include "stabcv/quiver.hpp"

#include <algorithm>
#include <string>

#include "stabcv/error.hpp"

namespace stabcv {

std::string_view to_string(TwoCyclePolicy policy) {
  return policy == TwoCyclePolicy::CancelTwoCycles ? "cancel" : "keep";
}

TwoCyclePolicy parse_two_cycle_policy(std::string_view text) {
  if (text == "cancel") return TwoCyclePolicy::CancelTwoCycles;
  if (text == "keep") return TwoCyclePolicy::KeepTwoCycles;
  throw InvalidInput("unknown two-cycle policy '" + std::string(text) + "'");
}

Quiver Quiver::frame(const IntMatrix& base) {
  if (!base.is_square()) throw InvalidQuiver("base matrix must be square");
  const std::size_t n = base.rows();
  IntMatrix arrows(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (base(i, i) != 0) throw SelfLoopInInput(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (base(i, j) < 0) throw InvalidQuiver("negative arrow count");
      arrows(i, j) = base(i, j);
    }
    arrows(i, n + i) = 1;
  }
  return Quiver(n, std::move(arrows));
}

Quiver Quiver::from_arrows(std::size_t n, IntMatrix arrows) {
  if (arrows.rows() != 2 * n || arrows.cols() != 2 * n)
    throw InvalidQuiver("arrow matrix must be " + std::to_string(2 * n) + "x" +
                        std::to_string(2 * n));
  for (std::size_t v = 0; v < 2 * n; ++v)
    if (arrows(v, v) != 0) throw SelfLoopInInput(v);
  Quiver q(n, std::move(arrows));
  q.check_invariants();
  return q;
}

void Quiver::check_invariants() const {
  const std::size_t m = vertex_count();
  for (std::size_t i = 0; i < m; ++i) {
    if (arrows_(i, i) != 0) throw InvalidQuiver("self-loop at vertex " + std::to_string(i));
    for (std::size_t j = 0; j < m; ++j) {
      if (arrows_(i, j) < 0) throw InvalidQuiver("negative arrow count");
      if (is_frozen(i) && is_frozen(j) && arrows_(i, j) != 0)
        throw InvalidQuiver("arrow between frozen vertices");
      if (is_frozen(i) != is_frozen(j) && arrows_(i, j) != 0 && arrows_(j, i) != 0)
        throw InvalidQuiver("2-cycle through a frozen vertex");
    }
  }
}

Quiver Quiver::mutate(std::size_t k, TwoCyclePolicy policy) const {
  const std::size_t m = vertex_count();
  if (k >= m) throw IndexOutOfRange("vertex " + std::to_string(k) + " out of range");
  if (is_frozen(k)) throw FrozenVertexMutation(k);

  IntMatrix next = arrows_;
  // 2-paths i -> k -> j, counted on the pre-mutation quiver.
  for (std::size_t i = 0; i < m; ++i) {
    const auto in = arrows_(i, k);
    if (i == k || in == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k) continue;
      std::int64_t added;
      if (__builtin_mul_overflow(in, arrows_(k, j), &added) ||
          __builtin_add_overflow(next(i, j), added, &next(i, j)))
        throw Error("arrow count overflows 64 bits");
    }
  }
  for (std::size_t i = 0; i < m; ++i) next(i, i) = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool both_mutable = !is_frozen(i) && !is_frozen(j);
      if (both_mutable && policy == TwoCyclePolicy::KeepTwoCycles) continue;
      const auto common = std::min(next(i, j), next(j, i));
      next(i, j) -= common;
      next(j, i) -= common;
    }
  for (std::size_t j = 0; j < m; ++j) std::swap(next(k, j), next(j, k));

  Quiver out(n_, std::move(next));
  out.check_invariants();
  return out;
}

IntMatrix Quiver::c_matrix() const {
  IntMatrix c(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) c(i, j) = arrows_(n_ + i, j) - arrows_(j, n_ + i);
  return c;
}

IntMatrix Quiver::exchange_matrix() const {
  IntMatrix b(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) b(i, j) = arrows_(i, j) - arrows_(j, i);
  return b;
}

}  // namespace stabcv
