#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "stabcv/polynomial.hpp"

namespace stabcv {

enum class ShapeKind { Row, Aztec2, Aztec4 };
std::string_view to_string(ShapeKind kind);
/// Accepts "row", "ad2", "ad4".
ShapeKind parse_shape_kind(std::string_view text);

enum class StoneRole { White, Black };

/// A stone of a layered pyramid. Layer j (from 1 at the top) holds j rows; row (j, r)
/// has whites at positions 0..L-1 and blacks at 0..L-2, where L = k - j + 1.
struct Stone {
  int layer = 1;
  int row = 0;
  int pos = 0;
  StoneRole role = StoneRole::White;
};

/// A finite pyramid together with its support relation.
class PyramidShape {
 public:
  ShapeKind kind() const noexcept { return kind_; }
  int size() const noexcept { return k_; }
  int layers() const noexcept { return kind_ == ShapeKind::Row ? 1 : k_; }
  /// Whites in a row of the given layer.
  int row_length(int layer) const noexcept { return k_ - layer + 1; }

  std::span<const Stone> stones() const noexcept { return stones_; }
  /// Indices of the stones resting directly on stone i (all must go before i can).
  std::span<const std::size_t> resting_on(std::size_t i) const { return above_[i]; }
  /// Index of a stone, or nullopt if the shape has no such stone.
  std::optional<std::size_t> find(int layer, int row, int pos, StoneRole role) const;

  std::size_t white_count() const noexcept { return whites_; }
  std::size_t black_count() const noexcept { return stones_.size() - whites_; }

  friend PyramidShape build_shape(ShapeKind kind, int k);

 private:
  ShapeKind kind_ = ShapeKind::Row;
  int k_ = 0;
  std::vector<Stone> stones_;  // ordered so every stone follows the stones above it
  std::vector<std::vector<std::size_t>> above_;
  std::size_t whites_ = 0;
};

/// Throws InvalidSize for k < 1.
PyramidShape build_shape(ShapeKind kind, int k);

/// Which variable counts a removed stone.
///
/// Two colors: whites -> y0, blacks -> y1. Four colors: odd layers whites -> y1 and
/// blacks -> y3, even layers (yellow/blue) -> y0 and y2.
class ColorScheme {
 public:
  static ColorScheme two_color();
  static ColorScheme four_color();
  /// The scheme each shape kind is weighted with.
  static ColorScheme for_kind(ShapeKind kind);

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t variable(int layer, StoneRole role) const;
  std::size_t variable(const Stone& s) const { return variable(s.layer, s.role); }
  /// Rows of even layers form the second class only under four colors.
  bool second_class(int layer) const noexcept { return nvars_ == 4 && layer % 2 == 0; }

 private:
  ColorScheme(std::size_t nvars, std::size_t odd_w, std::size_t odd_b, std::size_t even_w,
              std::size_t even_b)
      : nvars_(nvars), odd_white_(odd_w), odd_black_(odd_b), even_white_(even_w),
        even_black_(even_b) {}

  std::size_t nvars_;
  std::size_t odd_white_, odd_black_, even_white_, even_black_;
};

struct EnumerationLimits {
  std::uint64_t max_configurations = std::uint64_t{1} << 24;
};

/// Calls `visit` with the removal mask of every partition (up-closed removed set).
/// Throws ShapeTooLarge once more than limits.max_configurations have been visited.
void for_each_partition(const PyramidShape& shape,
                        const std::function<void(const std::vector<char>& removed)>& visit,
                        EnumerationLimits limits = {});

/// Sum over all partitions of the monomial counting removed stones per color.
Polynomial partition_function(const PyramidShape& shape, const ColorScheme& scheme,
                              EnumerationLimits limits = {});

/// Partition function of the row pyramid R_k by a left-to-right sweep.
Polynomial row_partition_function_dp(int k);

/// Kept whites at each end of an altered row.
struct SimpleRowPartition {
  std::int64_t left_kept = 0;
  std::int64_t right_kept = 0;
  friend bool operator==(const SimpleRowPartition&, const SimpleRowPartition&) = default;
};

struct AlteredRow {
  int layer = 1;
  int row = 0;
  SimpleRowPartition kept;
};

/// Statistics of a simple partition split by row class (second class: even layers of a
/// four-color shape). Height of a row is its layer minus one; x counts kept whites.
struct SimplePartitionStats {
  std::int64_t rows1 = 0, rows2 = 0;
  std::int64_t h1 = 0, h2 = 0;
  std::int64_t x1 = 0, x2 = 0;
};

struct SimplePartition {
  std::vector<AlteredRow> rows;
  SimplePartitionStats stats;
  ExponentVector weight;  // removed stones per color
};

/// True if the removal mask is a partition whose every row removes one consecutive
/// block of whites and leaves no black with both of its whites removed.
bool is_simple(const PyramidShape& shape, const std::vector<char>& removed);

struct SimpleEnumerationOptions {
  /// Skip partitions whose limit exponent has larger total degree.
  std::optional<std::int64_t> max_limit_degree;
  std::uint64_t max_count = std::uint64_t{1} << 24;
};

/// All simple partitions, generated row by row from (left_kept, right_kept) choices.
std::vector<SimplePartition> enumerate_simple_partitions(const PyramidShape& shape,
                                                         const ColorScheme& scheme,
                                                         SimpleEnumerationOptions options = {});

/// Exponent a simple partition contributes to the limit series:
/// (x+h+#rows, x+h) for two colors, (x2+h2+#R2, x1+h1+#R1, x2+h2, x1+h1) for four.
ExponentVector limit_exponent(const SimplePartitionStats& stats, std::size_t nvars);

}  // namespace stabcv
