#include "stabcv/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "stabcv/engine.hpp"
#include "stabcv/error.hpp"
#include "stabcv/limit_series.hpp"
#include "stabcv/pyramid.hpp"
#include "stabcv/stabilize.hpp"

namespace stabcv {

namespace {

class Suite {
 public:
  // Runs one named check; exceptions count as failures carrying their message.
  void check(std::string name, const std::function<std::string()>& body) {
    CheckResult r{std::move(name), false, {}};
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results_.push_back(std::move(r));
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::string mismatch(const std::string& what, std::size_t k) {
  return what + " differs at k=" + std::to_string(k);
}

std::string check_shapes(const MutationTrace& t) {
  for (std::size_t k = 1; k <= t.steps(); ++k) {
    const Polynomial& f = t[k].f;
    if (f.coefficient(ExponentVector(f.nvars())) != 1) return mismatch("constant term", k);
    if (!f.all_coefficients_positive()) return mismatch("coefficient sign", k);
    if (abs(determinant(t[k].c)) != 1) return mismatch("C-matrix determinant", k);
  }
  return {};
}

IntMatrix kronecker_c(std::int64_t k) {
  if (k % 2 == 0) return IntMatrix{{-(k + 1), k}, {-k, k - 1}};
  return IntMatrix{{k, -(k + 1)}, {k - 1, -k}};
}

// Compares a stable report with a limit series over every term of degree <= cap.
std::string compare_limit(const StableReport& report, const Polynomial& expected) {
  const Polynomial got = report.series();
  if (got == expected) return {};
  std::ostringstream os;
  os << "stable series " << canonical_text(got) << " != limit " << canonical_text(expected);
  return os.str();
}

std::string power_of_two_count(int k) {
  const Polynomial pf = partition_function(build_shape(ShapeKind::Aztec2, k), ColorScheme::two_color());
  Integer total = 0;
  for (const auto& [e, c] : pf.terms()) total += c;
  Integer expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(k * (k + 1) / 2));
  if (total != expected)
    return "AD_" + std::to_string(k) + " has " + total.get_str() + " partitions";
  return {};
}

void kronecker_suite(Suite& s, const Preset& p, std::size_t max_k) {
  const std::size_t steps = std::max<std::size_t>(max_k, 12);
  const MutationTrace t = run(p, steps);
  s.check("F-polynomial shape and unimodular C", [&] { return check_shapes(t); });
  s.check("recurrence F_k F_{k-2} = y0^k y1^(k-1) + F_{k-1}^2", [&]() -> std::string {
    for (std::size_t k = 2; k <= max_k; ++k) {
      const auto ki = static_cast<std::int64_t>(k);
      const Polynomial rhs = Polynomial::monomial(ExponentVector{ki, ki - 1}) + t[k - 1].f * t[k - 1].f;
      if (t[k].f * t[k - 2].f != rhs) return mismatch("recurrence", k);
    }
    return {};
  });
  s.check("closed-form C-matrices", [&]() -> std::string {
    for (std::size_t k = 1; k <= max_k; ++k)
      if (t[k].c != kronecker_c(static_cast<std::int64_t>(k))) return mismatch("C-matrix", k);
    return {};
  });
  s.check("row pyramid partition functions", [&]() -> std::string {
    for (std::size_t k = 1; k <= std::min<std::size_t>(max_k, 12); ++k) {
      const int ki = static_cast<int>(k);
      const Polynomial pf = partition_function(build_shape(ShapeKind::Row, ki), ColorScheme::two_color());
      if (pf != t[k].f) return mismatch("exhaustive enumeration vs F_k", k);
      if (row_partition_function_dp(ki) != t[k].f) return mismatch("sweep vs F_k", k);
    }
    return {};
  });
  s.check("normalized stable series equals the closed-form limit", [&]() -> std::string {
    const std::int64_t cap = 9;
    const StableReport r = stable_series(
        t, StableSeriesOptions{.period = 1,
                               .window = 3,
                               .degree_cap = cap,
                               .normalization = Normalization{p.normalization(), Parity::Even}});
    if (auto d = compare_limit(r, kronecker_limit(cap)); !d.empty()) return d;
    return compare_limit(r, limit_series_S(cap));
  });
}

void conifold_suite(Suite& s, const Preset& p, std::size_t max_k) {
  const std::size_t steps = std::max<std::size_t>(max_k, 14);
  const MutationTrace t = run(p, steps);
  s.check("F-polynomial shape and unimodular C", [&] { return check_shapes(t); });
  s.check("odd C-matrices are self-inverse closed forms", [&]() -> std::string {
    for (std::size_t k = 1; k <= max_k; k += 2) {
      const IntMatrix expected = kronecker_c(static_cast<std::int64_t>(k));
      if (t[k].c != expected || invert_unimodular(t[k].c) != expected) return mismatch("C-matrix", k);
    }
    return {};
  });
  s.check("Aztec diamond partition functions", [&]() -> std::string {
    for (std::size_t k = 1; k <= std::min<std::size_t>(max_k, 5); ++k) {
      const auto shape = build_shape(ShapeKind::Aztec2, static_cast<int>(k));
      if (partition_function(shape, ColorScheme::two_color()) != t[k].f)
        return mismatch("partition function vs F_k", k);
    }
    return {};
  });
  s.check("partition counts are powers of two", [&]() -> std::string {
    for (int k = 1; k <= static_cast<int>(std::min<std::size_t>(max_k, 4)); ++k)
      if (auto d = power_of_two_count(k); !d.empty()) return d;
    return {};
  });
  s.check("stable series equals the simple-partition limit", [&]() -> std::string {
    const std::int64_t cap = 9;
    const StableReport r = stable_series(
        t, StableSeriesOptions{.period = 1,
                               .window = 3,
                               .degree_cap = cap,
                               .normalization = Normalization{p.normalization(), Parity::Even}});
    return compare_limit(r, limit_series_T(cap, 2));
  });
}

void f0_suite(Suite& s, const Preset& p, std::size_t max_k) {
  const std::size_t even_steps = std::max<std::size_t>(max_k, 8);
  const MutationTrace raw = run(p, 2 * even_steps);
  const MutationTrace t = subsample(raw, p.subsample_offset, p.subsample_stride);
  s.check("F-polynomial shape and unimodular C", [&] { return check_shapes(raw); });
  s.check("folding onto the conifold", [&]() -> std::string {
    const std::size_t count = std::min<std::size_t>(max_k, 6);
    const MutationTrace conifold = run(preset("conifold"), count);
    for (std::size_t k = 1; k <= count; ++k)
      if (substitute(t[k].f, f0_folding()) != conifold[k].f) return mismatch("folded F", k);
    return {};
  });
  s.check("four-color Aztec diamond partition functions", [&]() -> std::string {
    for (std::size_t k = 1; k <= std::min<std::size_t>(max_k, 4); ++k) {
      const auto shape = build_shape(ShapeKind::Aztec4, static_cast<int>(k));
      if (partition_function(shape, ColorScheme::four_color()) != t[k].f)
        return mismatch("partition function vs even F_k", k);
    }
    return {};
  });
  s.check("four colors collapse to two", [&]() -> std::string {
    for (std::size_t k = 1; k <= std::min<std::size_t>(max_k, 4); ++k) {
      const int ki = static_cast<int>(k);
      const Polynomial four = partition_function(build_shape(ShapeKind::Aztec4, ki), ColorScheme::four_color());
      const Polynomial two = partition_function(build_shape(ShapeKind::Aztec2, ki), ColorScheme::two_color());
      if (substitute(four, f0_folding()) != two) return mismatch("collapsed partition function", k);
    }
    return {};
  });
  s.check("stable series equals the four-color limit", [&]() -> std::string {
    const std::int64_t cap = 8;
    const StableReport r = stable_series(
        t, StableSeriesOptions{.period = 1,
                               .window = 3,
                               .degree_cap = cap,
                               .normalization = Normalization{p.normalization(), Parity::Even}});
    return compare_limit(r, limit_series_T(cap, 4));
  });
}

}  // namespace

std::vector<CheckResult> verify_preset(const Preset& preset, std::size_t max_k) {
  if (max_k < 1) throw InvalidInput("max-k must be at least 1");
  if (max_k > 24) throw InvalidInput("max-k is capped at 24");
  Suite s;
  if (preset.name == "kronecker")
    kronecker_suite(s, preset, max_k);
  else if (preset.name == "conifold")
    conifold_suite(s, preset, max_k);
  else
    f0_suite(s, preset, max_k);
  return s.take();
}

std::vector<CheckResult> verify_quiver(const Quiver& quiver, std::span<const std::size_t> sequence,
                                       TwoCyclePolicy policy, std::size_t steps) {
  Suite s;
  const MutationTrace t = run(quiver, sequence, policy, steps);
  s.check("F-polynomial shape and unimodular C", [&] { return check_shapes(t); });
  if (policy == TwoCyclePolicy::CancelTwoCycles)
    s.check("mutation is an involution", [&]() -> std::string {
      for (std::size_t k = 0; k < t.steps(); ++k) {
        const std::size_t v = *t[k + 1].vertex;
        if (t[k].quiver.mutate(v, policy).mutate(v, policy) != t[k].quiver)
          return mismatch("double mutation", k + 1);
      }
      return {};
    });
  return s.take();
}

}  // namespace stabcv
