#include "stabcv/engine.hpp"

#include <string>

#include "stabcv/error.hpp"
#include "stabcv/stabilize.hpp"

namespace stabcv {

MutationTrace::MutationTrace(StepRecord seed) {
  seed.k = 0;
  records_.push_back(std::move(seed));
}

void MutationTrace::push(StepRecord record) {
  record.k = records_.size();
  records_.push_back(std::move(record));
}

namespace {

// Product of the mutable labels raised to the given multiplicities.
Polynomial label_product(std::span<const Polynomial> labels,
                         std::span<const std::int64_t> multiplicity, std::size_t nvars) {
  Polynomial out = Polynomial::one(nvars);
  for (std::size_t j = 0; j < labels.size(); ++j)
    if (multiplicity[j] > 0) out = out * pow(labels[j], static_cast<unsigned>(multiplicity[j]));
  return out;
}

Polynomial shifted(const Polynomial& p, const ExponentVector& by) {
  if (by.is_zero()) return p;
  Polynomial out(p.nvars());
  out.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) out.accumulate(e + by, c);
  return out;
}

}  // namespace

Polynomial exchange_label(const Quiver& q, std::span<const Polynomial> labels, std::size_t k) {
  const std::size_t n = q.mutable_count();
  if (labels.size() != n) throw VariableCountMismatch(n, labels.size());
  if (k >= q.vertex_count()) throw IndexOutOfRange("vertex " + std::to_string(k));
  if (q.is_frozen(k)) throw FrozenVertexMutation(k);

  std::vector<std::int64_t> in_mult(n), out_mult(n);
  ExponentVector in_mono(n), out_mono(n);
  for (std::size_t j = 0; j < n; ++j) {
    in_mult[j] = q.arrows(j, k);
    out_mult[j] = q.arrows(k, j);
    in_mono[j] = q.arrows(n + j, k);
    out_mono[j] = q.arrows(k, n + j);
  }

  const Polynomial in_product = label_product(labels, in_mult, n);
  // The conifold has identical mutable neighbourhoods on both sides; square once.
  const Polynomial out_product =
      in_mult == out_mult ? in_product : label_product(labels, out_mult, n);

  const Polynomial numerator = shifted(in_product, in_mono) + shifted(out_product, out_mono);
  return div_exact(numerator, labels[k]);
}

void check_f_polynomial_shape(const Polynomial& f, std::size_t step) {
  if (f.coefficient(ExponentVector(f.nvars())) != 1)
    throw InvariantViolation("F_" + std::to_string(step) + " does not have constant term 1");
  if (!f.all_coefficients_positive())
    throw InvariantViolation("F_" + std::to_string(step) + " has a non-positive coefficient");
}

MutationRun::MutationRun(Quiver initial, std::vector<std::size_t> sequence, TwoCyclePolicy policy)
    : quiver_(std::move(initial)), sequence_(std::move(sequence)), policy_(policy) {
  if (sequence_.empty()) throw InvalidInput("mutation sequence is empty");
  for (auto v : sequence_) {
    if (v >= quiver_.vertex_count()) throw IndexOutOfRange("vertex " + std::to_string(v));
    if (quiver_.is_frozen(v)) throw FrozenVertexMutation(v);
  }
  const std::size_t n = quiver_.mutable_count();
  labels_.assign(n, Polynomial::one(n));
}

StepRecord MutationRun::advance() {
  const std::size_t k = sequence_[step_ % sequence_.size()];
  Polynomial f = exchange_label(quiver_, labels_, k);
  ++step_;
  check_f_polynomial_shape(f, step_);
  quiver_ = quiver_.mutate(k, policy_);
  IntMatrix c = quiver_.c_matrix();
  const Integer det = determinant(c);
  if (abs(det) != 1)
    throw InvariantViolation("C_" + std::to_string(step_) + " has determinant " + det.get_str());
  labels_[k] = f;
  return StepRecord{.k = step_,
                    .source_step = step_,
                    .vertex = k,
                    .f = std::move(f),
                    .c = std::move(c),
                    .quiver = quiver_};
}

MutationTrace run(const Quiver& initial, std::span<const std::size_t> sequence,
                  TwoCyclePolicy policy, std::size_t steps, RunLimits limits) {
  if (steps > limits.max_steps)
    throw InvalidInput("requested " + std::to_string(steps) + " steps, cap is " +
                       std::to_string(limits.max_steps));
  const std::size_t n = initial.mutable_count();
  MutationTrace trace(StepRecord{.vertex = std::nullopt,
                                 .f = Polynomial::one(n),
                                 .c = initial.c_matrix(),
                                 .quiver = initial});
  MutationRun runner(initial, std::vector<std::size_t>(sequence.begin(), sequence.end()), policy);
  for (std::size_t s = 0; s < steps; ++s) trace.push(runner.advance());
  return trace;
}

MutationTrace run(const Preset& preset, std::size_t steps, RunLimits limits) {
  return run(preset.quiver(), preset.sequence, preset.policy, steps, limits);
}

MutationTrace subsample(const MutationTrace& trace, std::size_t offset, std::size_t stride) {
  if (stride == 0) throw InvalidInput("subsample stride must be at least 1");
  MutationTrace out(trace[0]);
  for (std::size_t k = offset; k <= trace.steps(); k += stride) out.push(trace[k]);
  return out;
}

}  // namespace stabcv
