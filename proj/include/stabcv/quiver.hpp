#pragma once

#include <cstdint>
#include <string_view>

#include "stabcv/int_matrix.hpp"

namespace stabcv {

/// What mutation does with opposite arrow pairs between mutable vertices.
///
/// Self-loops are always deleted, and opposite arrows between a mutable and a frozen
/// vertex always cancel (the frozen block stays a signed count). KeepTwoCycles only
/// spares 2-cycles among mutable vertices, as the conifold requires.
enum class TwoCyclePolicy { CancelTwoCycles, KeepTwoCycles };

std::string_view to_string(TwoCyclePolicy policy);
TwoCyclePolicy parse_two_cycle_policy(std::string_view text);

/// A framed quiver on 2n vertices: 0..n-1 mutable, n+i the frozen copy of i.
/// arrows(i, j) is the number of arrows i -> j.
class Quiver {
 public:
  /// Adds one frozen vertex per base vertex and an arrow i -> n+i.
  static Quiver frame(const IntMatrix& base);
  /// Validates a full 2n x 2n arrow-count matrix.
  static Quiver from_arrows(std::size_t n, IntMatrix arrows);

  std::size_t mutable_count() const noexcept { return n_; }
  std::size_t vertex_count() const noexcept { return 2 * n_; }
  bool is_frozen(std::size_t v) const noexcept { return v >= n_; }
  std::int64_t arrows(std::size_t from, std::size_t to) const { return arrows_(from, to); }
  const IntMatrix& arrow_matrix() const noexcept { return arrows_; }

  /// Mutation at mutable vertex k; the receiver is unchanged.
  Quiver mutate(std::size_t k, TwoCyclePolicy policy) const;

  /// entry(i, j) = arrows(n+i, j) - arrows(j, n+i).
  IntMatrix c_matrix() const;

  /// arrows(i, j) - arrows(j, i) over the mutable vertices.
  IntMatrix exchange_matrix() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  Quiver(std::size_t n, IntMatrix arrows) : n_(n), arrows_(std::move(arrows)) {}
  void check_invariants() const;

  std::size_t n_ = 0;
  IntMatrix arrows_;
};

}  // namespace stabcv
