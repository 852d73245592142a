#include "stabcv/pyramid.hpp"

#include <algorithm>
#include <string>

#include "stabcv/error.hpp"

namespace stabcv {

std::string_view to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Row: return "row";
    case ShapeKind::Aztec2: return "ad2";
    case ShapeKind::Aztec4: return "ad4";
  }
  return "row";
}

ShapeKind parse_shape_kind(std::string_view text) {
  if (text == "row") return ShapeKind::Row;
  if (text == "ad2") return ShapeKind::Aztec2;
  if (text == "ad4") return ShapeKind::Aztec4;
  throw InvalidInput("unknown shape '" + std::string(text) + "' (expected row, ad2 or ad4)");
}

std::optional<std::size_t> PyramidShape::find(int layer, int row, int pos, StoneRole role) const {
  // Stones are laid out depth by depth, so a linear scan is simplest; shapes are small.
  for (std::size_t i = 0; i < stones_.size(); ++i) {
    const Stone& s = stones_[i];
    if (s.layer == layer && s.row == row && s.pos == pos && s.role == role) return i;
  }
  return std::nullopt;
}

PyramidShape build_shape(ShapeKind kind, int k) {
  if (k < 1) throw InvalidSize("pyramid size must be at least 1, got " + std::to_string(k));
  PyramidShape shape;
  shape.kind_ = kind;
  shape.k_ = k;
  const int layers = shape.layers();

  // Depth 2j-1 holds the whites of layer j, depth 2j its blacks; every support edge
  // goes from one depth to the next, so this order is topological.
  auto index_of = [&](int layer, int row, int pos, StoneRole role) -> std::optional<std::size_t> {
    if (layer < 1 || layer > layers || row < 0 || row >= layer) return std::nullopt;
    const int len = shape.row_length(layer);
    const int count = role == StoneRole::White ? len : len - 1;
    if (pos < 0 || pos >= count) return std::nullopt;
    return shape.find(layer, row, pos, role);
  };

  for (int j = 1; j <= layers; ++j) {
    const int len = shape.row_length(j);
    for (StoneRole role : {StoneRole::White, StoneRole::Black}) {
      const int count = role == StoneRole::White ? len : len - 1;
      for (int r = 0; r < j; ++r)
        for (int p = 0; p < count; ++p) {
          shape.stones_.push_back(Stone{j, r, p, role});
          std::vector<std::size_t> above;
          if (role == StoneRole::Black) {
            above.push_back(*index_of(j, r, p, StoneRole::White));
            above.push_back(*index_of(j, r, p + 1, StoneRole::White));
          } else if (j >= 2) {
            for (int pr : {r - 1, r})
              if (auto i = index_of(j - 1, pr, p, StoneRole::Black)) above.push_back(*i);
          }
          shape.above_.push_back(std::move(above));
          if (role == StoneRole::White) ++shape.whites_;
        }
    }
  }
  return shape;
}

ColorScheme ColorScheme::two_color() { return ColorScheme(2, 0, 1, 0, 1); }
ColorScheme ColorScheme::four_color() { return ColorScheme(4, 1, 3, 0, 2); }

ColorScheme ColorScheme::for_kind(ShapeKind kind) {
  return kind == ShapeKind::Aztec4 ? four_color() : two_color();
}

std::size_t ColorScheme::variable(int layer, StoneRole role) const {
  const bool odd = layer % 2 == 1;
  if (role == StoneRole::White) return odd ? odd_white_ : even_white_;
  return odd ? odd_black_ : even_black_;
}

namespace {

// Depth-first walk over order ideals of removed stones. Each stone is decided after
// every stone resting on it, so "removable" is a local test.
template <typename Leaf>
class PartitionWalker {
 public:
  PartitionWalker(const PyramidShape& shape, EnumerationLimits limits, Leaf& leaf)
      : shape_(shape), limits_(limits), leaf_(leaf), removed_(shape.stones().size(), 0) {}

  void walk() { visit(0); }

 private:
  void visit(std::size_t i) {
    if (i == removed_.size()) {
      if (++visited_ > limits_.max_configurations)
        throw ShapeTooLarge("more than " + std::to_string(limits_.max_configurations) +
                            " partitions; shape is too large for exhaustive enumeration");
      leaf_(removed_);
      return;
    }
    visit(i + 1);
    for (std::size_t a : shape_.resting_on(i))
      if (!removed_[a]) return;
    removed_[i] = 1;
    leaf_.push(i);
    visit(i + 1);
    leaf_.pop(i);
    removed_[i] = 0;
  }

  const PyramidShape& shape_;
  EnumerationLimits limits_;
  Leaf& leaf_;
  std::vector<char> removed_;
  std::uint64_t visited_ = 0;
};

struct CallbackLeaf {
  const std::function<void(const std::vector<char>&)>& visit;
  void operator()(const std::vector<char>& removed) { visit(removed); }
  void push(std::size_t) {}
  void pop(std::size_t) {}
};

// Counts partitions per weight in a dense table indexed by the per-color removal counts.
struct WeightLeaf {
  WeightLeaf(const PyramidShape& shape, const ColorScheme& scheme)
      : nvars(scheme.nvars()), counts(nvars, 0), extent(nvars, 1), color(shape.stones().size()) {
    for (std::size_t i = 0; i < color.size(); ++i) {
      color[i] = scheme.variable(shape.stones()[i]);
      ++extent[color[i]];
    }
    std::size_t size = 1;
    for (auto e : extent) size *= e;
    table.assign(size, 0);
  }

  void operator()(const std::vector<char>&) {
    std::size_t idx = 0;
    for (std::size_t v = nvars; v-- > 0;) idx = idx * extent[v] + counts[v];
    ++table[idx];
  }
  void push(std::size_t i) { ++counts[color[i]]; }
  void pop(std::size_t i) { --counts[color[i]]; }

  Polynomial result() const {
    Polynomial out(nvars);
    ExponentVector e(nvars);
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
      if (table[idx] == 0) continue;
      std::size_t rest = idx;
      for (std::size_t v = 0; v < nvars; ++v) {
        e[v] = static_cast<std::int64_t>(rest % extent[v]);
        rest /= extent[v];
      }
      out.accumulate(e, Integer(static_cast<unsigned long>(table[idx])));
    }
    return out;
  }

  std::size_t nvars;
  std::vector<std::size_t> counts, extent, color;
  std::vector<std::uint64_t> table;
};

}  // namespace

void for_each_partition(const PyramidShape& shape,
                        const std::function<void(const std::vector<char>&)>& visit,
                        EnumerationLimits limits) {
  CallbackLeaf leaf{visit};
  PartitionWalker<CallbackLeaf>(shape, limits, leaf).walk();
}

Polynomial partition_function(const PyramidShape& shape, const ColorScheme& scheme,
                              EnumerationLimits limits) {
  WeightLeaf leaf(shape, scheme);
  PartitionWalker<WeightLeaf>(shape, limits, leaf).walk();
  return leaf.result();
}

Polynomial row_partition_function_dp(int k) {
  if (k < 1) throw InvalidSize("row pyramid size must be at least 1, got " + std::to_string(k));
  const Polynomial y0 = Polynomial::variable(2, 0);
  const Polynomial y1 = Polynomial::variable(2, 1);
  const Polynomial one = Polynomial::one(2);
  // removed/kept: partition functions of the prefix ending in a removed/kept white.
  Polynomial removed = y0;
  Polynomial kept = one;
  const Polynomial both_removed = y0 * (one + y1);
  for (int p = 1; p < k; ++p) {
    Polynomial next_kept = removed + kept;
    removed = kept * y0 + removed * both_removed;
    kept = std::move(next_kept);
  }
  return removed + kept;
}

bool is_simple(const PyramidShape& shape, const std::vector<char>& removed) {
  const auto stones = shape.stones();
  if (removed.size() != stones.size()) throw InvalidInput("removal mask has wrong length");
  for (std::size_t i = 0; i < stones.size(); ++i)
    if (removed[i])
      for (std::size_t a : shape.resting_on(i))
        if (!removed[a]) return false;

  for (int j = 1; j <= shape.layers(); ++j) {
    const int len = shape.row_length(j);
    for (int r = 0; r < j; ++r) {
      std::vector<char> white(len);
      for (int p = 0; p < len; ++p) white[p] = removed[*shape.find(j, r, p, StoneRole::White)];
      // One consecutive block of removed whites.
      int blocks = 0;
      for (int p = 0; p < len; ++p)
        if (white[p] && (p == 0 || !white[p - 1])) ++blocks;
      if (blocks > 1) return false;
      for (int p = 0; p + 1 < len; ++p)
        if (white[p] && white[p + 1] && !removed[*shape.find(j, r, p, StoneRole::Black)])
          return false;
    }
  }
  return true;
}

ExponentVector limit_exponent(const SimplePartitionStats& s, std::size_t nvars) {
  if (nvars == 2) {
    const std::int64_t xh = s.x1 + s.x2 + s.h1 + s.h2;
    return ExponentVector{xh + s.rows1 + s.rows2, xh};
  }
  if (nvars == 4)
    return ExponentVector{s.x2 + s.h2 + s.rows2, s.x1 + s.h1 + s.rows1, s.x2 + s.h2, s.x1 + s.h1};
  throw InvalidInput("limit exponent needs 2 or 4 colors, got " + std::to_string(nvars));
}

namespace {

struct RowSlot {
  int layer;
  int row;
  int length;
  std::vector<std::size_t> parents;  // indices into the row list
};

class SimpleEnumerator {
 public:
  SimpleEnumerator(const PyramidShape& shape, const ColorScheme& scheme,
                   SimpleEnumerationOptions options)
      : scheme_(scheme), options_(options) {
    for (int j = 1; j <= shape.layers(); ++j)
      for (int r = 0; r < j; ++r) {
        RowSlot slot{j, r, shape.row_length(j), {}};
        if (j >= 2) {
          const std::size_t first_of_upper = rows_.size() - static_cast<std::size_t>(r) - (j - 1);
          if (r >= 1) slot.parents.push_back(first_of_upper + r - 1);
          if (r <= j - 2) slot.parents.push_back(first_of_upper + r);
        }
        rows_.push_back(std::move(slot));
      }
    choice_.assign(rows_.size(), std::nullopt);
  }

  std::vector<SimplePartition> run() {
    visit(0, 0);
    return std::move(out_);
  }

 private:
  void visit(std::size_t i, std::int64_t degree) {
    if (i == rows_.size()) {
      emit();
      return;
    }
    visit(i + 1, degree);

    const RowSlot& slot = rows_[i];
    std::int64_t min_l = 0, min_m = 0;
    for (std::size_t p : slot.parents) {
      if (!choice_[p]) return;
      min_l = std::max(min_l, choice_[p]->left_kept);
      min_m = std::max(min_m, choice_[p]->right_kept);
    }
    const std::int64_t h = slot.layer - 1;
    for (std::int64_t l = min_l; l + min_m <= slot.length - 1; ++l)
      for (std::int64_t m = min_m; l + m <= slot.length - 1; ++m) {
        const std::int64_t d = degree + 2 * (l + m + h) + 1;
        if (options_.max_limit_degree && d > *options_.max_limit_degree) break;
        choice_[i] = SimpleRowPartition{l, m};
        visit(i + 1, d);
      }
    choice_[i].reset();
  }

  void emit() {
    if (out_.size() >= options_.max_count)
      throw ShapeTooLarge("more than " + std::to_string(options_.max_count) +
                          " simple partitions; shape is too large");
    SimplePartition sp;
    sp.weight = ExponentVector(scheme_.nvars());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!choice_[i]) continue;
      const RowSlot& slot = rows_[i];
      const SimpleRowPartition c = *choice_[i];
      sp.rows.push_back(AlteredRow{slot.layer, slot.row, c});
      const std::int64_t kept = c.left_kept + c.right_kept;
      const std::int64_t h = slot.layer - 1;
      if (scheme_.second_class(slot.layer)) {
        ++sp.stats.rows2;
        sp.stats.h2 += h;
        sp.stats.x2 += kept;
      } else {
        ++sp.stats.rows1;
        sp.stats.h1 += h;
        sp.stats.x1 += kept;
      }
      sp.weight[scheme_.variable(slot.layer, StoneRole::White)] += slot.length - kept;
      sp.weight[scheme_.variable(slot.layer, StoneRole::Black)] += slot.length - 1 - kept;
    }
    out_.push_back(std::move(sp));
  }

  const ColorScheme& scheme_;
  SimpleEnumerationOptions options_;
  std::vector<RowSlot> rows_;
  std::vector<std::optional<SimpleRowPartition>> choice_;
  std::vector<SimplePartition> out_;
};

}  // namespace

std::vector<SimplePartition> enumerate_simple_partitions(const PyramidShape& shape,
                                                         const ColorScheme& scheme,
                                                         SimpleEnumerationOptions options) {
  return SimpleEnumerator(shape, scheme, options).run();
}

}  // namespace stabcv
