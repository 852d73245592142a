#include "stabcv/limit_series.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "stabcv/error.hpp"
#include "stabcv/pyramid.hpp"

namespace stabcv {

Polynomial limit_series_S(std::int64_t degree_cap) {
  if (degree_cap < 0) throw InvalidInput("degree cap must be nonnegative");
  Polynomial out = Polynomial::one(2);
  for (std::int64_t kept = 0; 2 * kept + 1 <= degree_cap; ++kept)
    out.accumulate(ExponentVector{kept + 1, kept}, kept + 1);  // kept + 1 ways to split l + m
  return out;
}

namespace {

// Rows of the infinite pyramid are (h, r) with 0 <= r <= h, covered by (h-1, r-1) and
// (h-1, r). An altered row at height h forces a chain of h altered rows above it, so
// its degree contribution alone is at least (h+1)^2.
class TSeries {
 public:
  TSeries(std::int64_t cap, int colors) : cap_(cap), nvars_(colors), out_(nvars_) {
    std::int64_t height = 0;
    while ((height + 2) * (height + 2) <= cap) ++height;
    for (std::int64_t h = 0; h <= height; ++h)
      for (std::int64_t r = 0; r <= h; ++r) {
        Row row{h, {}};
        if (h >= 1) {
          const std::size_t upper = rows_.size() - static_cast<std::size_t>(r + h);
          if (r >= 1) row.parents.push_back(upper + r - 1);
          if (r <= h - 1) row.parents.push_back(upper + r);
        }
        rows_.push_back(std::move(row));
      }
    choice_.assign(rows_.size(), std::nullopt);
  }

  Polynomial run() {
    visit(0, 0);
    return std::move(out_);
  }

 private:
  struct Row {
    std::int64_t height;
    std::vector<std::size_t> parents;
  };

  void visit(std::size_t i, std::int64_t degree) {
    if (i == rows_.size()) {
      emit();
      return;
    }
    visit(i + 1, degree);
    std::int64_t min_l = 0, min_m = 0;
    for (std::size_t p : rows_[i].parents) {
      if (!choice_[p]) return;
      min_l = std::max(min_l, choice_[p]->first);
      min_m = std::max(min_m, choice_[p]->second);
    }
    const std::int64_t base = degree + 2 * rows_[i].height + 1;
    for (std::int64_t l = min_l; base + 2 * (l + min_m) <= cap_; ++l)
      for (std::int64_t m = min_m; base + 2 * (l + m) <= cap_; ++m) {
        choice_[i] = std::pair{l, m};
        visit(i + 1, base + 2 * (l + m));
      }
    choice_[i].reset();
  }

  void emit() {
    SimplePartitionStats s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!choice_[i]) continue;
      const std::int64_t h = rows_[i].height;
      const std::int64_t kept = choice_[i]->first + choice_[i]->second;
      // Height parity decides the color class: even heights are odd layers.
      if (nvars_ == 4 && h % 2 == 1) {
        ++s.rows2, s.h2 += h, s.x2 += kept;
      } else {
        ++s.rows1, s.h1 += h, s.x1 += kept;
      }
    }
    out_.accumulate(limit_exponent(s, nvars_), 1);
  }

  std::int64_t cap_;
  std::size_t nvars_;
  Polynomial out_;
  std::vector<Row> rows_;
  std::vector<std::optional<std::pair<std::int64_t, std::int64_t>>> choice_;
};

}  // namespace

Polynomial limit_series_T(std::int64_t degree_cap, int colors) {
  if (degree_cap < 0) throw InvalidInput("degree cap must be nonnegative");
  if (colors != 2 && colors != 4)
    throw InvalidInput("limit series T takes 2 or 4 colors, got " + std::to_string(colors));
  return TSeries(degree_cap, colors).run();
}

}  // namespace stabcv
