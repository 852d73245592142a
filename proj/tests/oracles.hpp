#pragma once

// Test-side reference implementations. Nothing here calls the library's arithmetic
// beyond building Polynomial values from term lists.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include <stabcv/polynomial.hpp>

namespace oracle {

using stabcv::ExponentVector;
using stabcv::Integer;
using stabcv::Polynomial;

using TermTable = std::map<std::vector<std::int64_t>, Integer>;

inline TermTable table_of(const Polynomial& p) {
  TermTable t;
  for (const auto& [e, c] : p.terms()) t[std::vector<std::int64_t>(e.begin(), e.end())] = c;
  return t;
}

inline Polynomial from_table(std::size_t nvars, const TermTable& t) {
  Polynomial p(nvars);
  for (const auto& [e, c] : t)
    if (c != 0) p.accumulate(ExponentVector(std::span<const std::int64_t>(e)), c);
  return p;
}

// Schoolbook product over an ordered map.
inline Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  TermTable out;
  for (const auto& [a, x] : p.terms())
    for (const auto& [b, y] : q.terms()) {
      std::vector<std::int64_t> e(a.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
      out[e] += x * y;
    }
  return from_table(p.nvars(), out);
}

struct RandomSpec {
  std::size_t nvars = 2;
  std::size_t terms = 6;
  std::int64_t min_exp = 0;
  std::int64_t max_exp = 4;
  long min_coeff = -5;
  long max_coeff = 5;
};

inline Polynomial random_polynomial(std::mt19937_64& rng, const RandomSpec& s) {
  std::uniform_int_distribution<std::int64_t> exp(s.min_exp, s.max_exp);
  std::uniform_int_distribution<long> coeff(s.min_coeff, s.max_coeff);
  TermTable t;
  for (std::size_t i = 0; i < s.terms; ++i) {
    std::vector<std::int64_t> e(s.nvars);
    for (auto& x : e) x = exp(rng);
    t[e] += coeff(rng);
  }
  return from_table(s.nvars, t);
}

// Limit series of simple partitions of the infinite (2- or 4-color) Aztec diamond,
// enumerated level by level: the altered rows at height h are any subset of 0..h
// whose members have both parents (where they exist) altered at height h-1. Each
// altered row then gets (l, m) with l and m weakly growing along every parent edge.
inline Polynomial limit_series(std::int64_t cap, int colors) {
  struct Row {
    int h, r;
  };
  TermTable out;
  const std::size_t nvars = colors == 2 ? 2 : 4;

  std::vector<Row> rows;
  std::function<void(int, std::uint64_t)> levels;
  std::function<void(std::size_t, std::vector<std::int64_t>&, std::vector<std::int64_t>&,
                     std::int64_t)>
      assign;

  auto parents = [&](std::size_t i, std::vector<std::size_t>& ps) {
    ps.clear();
    for (std::size_t j = 0; j < i; ++j)
      if (rows[j].h == rows[i].h - 1 && (rows[j].r == rows[i].r - 1 || rows[j].r == rows[i].r))
        ps.push_back(j);
  };

  auto base_degree = [&] {
    std::int64_t d = 0;
    for (const Row& row : rows) d += 2 * row.h + 1;
    return d;
  };

  auto emit = [&](const std::vector<std::int64_t>& l, const std::vector<std::int64_t>& m) {
    std::int64_t rows_[2] = {0, 0}, h[2] = {0, 0}, x[2] = {0, 0};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const int cls = colors == 4 && rows[i].h % 2 == 1 ? 1 : 0;
      rows_[cls] += 1;
      h[cls] += rows[i].h;
      x[cls] += l[i] + m[i];
    }
    std::vector<std::int64_t> e;
    if (colors == 2) {
      const std::int64_t xh = x[0] + h[0];
      e = {xh + rows_[0], xh};
    } else {
      e = {x[1] + h[1] + rows_[1], x[0] + h[0] + rows_[0], x[1] + h[1], x[0] + h[0]};
    }
    std::int64_t deg = 0;
    for (auto v : e) deg += v;
    if (deg <= cap) out[e] += 1;
  };

  assign = [&](std::size_t i, std::vector<std::int64_t>& l, std::vector<std::int64_t>& m,
               std::int64_t budget) {
    if (i == rows.size()) {
      emit(l, m);
      return;
    }
    std::vector<std::size_t> ps;
    parents(i, ps);
    std::int64_t lo_l = 0, lo_m = 0;
    for (auto p : ps) {
      lo_l = std::max(lo_l, l[p]);
      lo_m = std::max(lo_m, m[p]);
    }
    // Every unit of l or m adds 2 to the total degree under both colorings.
    for (std::int64_t a = lo_l; 2 * (a + lo_m) <= budget; ++a)
      for (std::int64_t b = lo_m; 2 * (a + b) <= budget; ++b) {
        l[i] = a;
        m[i] = b;
        assign(i + 1, l, m, budget - 2 * (a + b));
      }
  };

  levels = [&](int h, std::uint64_t previous) {
    const std::int64_t budget = cap - base_degree();
    if (budget < 0) return;
    std::vector<std::int64_t> l(rows.size()), m(rows.size());
    assign(0, l, m, budget);
    if (previous == 0) return;
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << (h + 1)); ++subset) {
      bool ok = true;
      for (int r = 0; r <= h && ok; ++r) {
        if (!(subset >> r & 1)) continue;
        if (r - 1 >= 0 && !(previous >> (r - 1) & 1)) ok = false;
        if (r <= h - 1 && !(previous >> r & 1)) ok = false;
      }
      if (!ok) continue;
      const std::size_t mark = rows.size();
      for (int r = 0; r <= h; ++r)
        if (subset >> r & 1) rows.push_back({h, r});
      levels(h + 1, subset);
      rows.resize(mark);
    }
  };

  // Height 0: either no altered rows at all, or the top row.
  {
    std::vector<std::int64_t> none;
    emit(none, none);
  }
  rows.push_back({0, 0});
  levels(1, 1);
  (void)nvars;
  return from_table(nvars, out);
}

// Stones of a pyramid rebuilt from the geometric rules, independently of build_shape.
struct Stone {
  int j, r, p;
  bool black;
};

struct Pyramid {
  std::vector<Stone> stones;
  std::vector<std::vector<std::size_t>> above;  // stones resting on each stone
};

// kind: 0 row, 1 Aztec diamond.
inline Pyramid pyramid(int kind, int k) {
  Pyramid py;
  const int layers = kind == 0 ? 1 : k;
  for (int j = 1; j <= layers; ++j)
    for (int r = 0; r < j; ++r) {
      const int len = k - j + 1;
      for (int p = 0; p < len; ++p) py.stones.push_back({j, r, p, false});
      for (int p = 0; p + 1 < len; ++p) py.stones.push_back({j, r, p, true});
    }
  py.above.resize(py.stones.size());
  for (std::size_t a = 0; a < py.stones.size(); ++a)
    for (std::size_t b = 0; b < py.stones.size(); ++b) {
      const Stone& s = py.stones[a];  // candidate lower stone
      const Stone& t = py.stones[b];  // candidate upper stone
      bool rests = false;
      if (s.black && !t.black && t.j == s.j && t.r == s.r && (t.p == s.p || t.p == s.p + 1))
        rests = true;
      if (!s.black && t.black && t.j == s.j - 1 && (t.r == s.r - 1 || t.r == s.r) && t.p == s.p)
        rests = true;
      if (rests) py.above[a].push_back(b);
    }
  return py;
}

// Partition function by brute force over every subset of stones. `var` gives the
// variable counting each removed stone.
inline Polynomial brute_partition_function(const Pyramid& py, std::size_t nvars,
                                           const std::function<std::size_t(const Stone&)>& var,
                                           std::uint64_t* count = nullptr) {
  const std::size_t n = py.stones.size();
  TermTable out;
  std::uint64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (mask >> i & 1)
        for (auto a : py.above[i])
          if (!(mask >> a & 1)) ok = false;
    if (!ok) continue;
    ++total;
    std::vector<std::int64_t> e(nvars, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) e[var(py.stones[i])] += 1;
    out[e] += 1;
  }
  if (count) *count = total;
  return from_table(nvars, out);
}

inline std::size_t two_color(const Stone& s) { return s.black ? 1 : 0; }
inline std::size_t four_color(const Stone& s) {
  if (s.j % 2 == 1) return s.black ? 3 : 1;
  return s.black ? 2 : 0;
}

}  // namespace oracle
