#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stabcv/int_matrix.hpp"
#include "stabcv/polynomial.hpp"
#include "stabcv/presets.hpp"
#include "stabcv/quiver.hpp"

namespace stabcv {

/// The state after one mutation step.
struct StepRecord {
  std::size_t k = 0;            // index within its trace (0 is the initial seed)
  std::size_t source_step = 0;  // step number in the original run
  std::optional<std::size_t> vertex;  // mutated vertex; empty for the seed
  Polynomial f;                 // F-polynomial produced at this step
  IntMatrix c;                  // C-matrix of the quiver after the step
  Quiver quiver;                // quiver after the step
};

/// Records 0..K of a run. Record 0 is the seed: F = 1 and the C-matrix of the initial
/// quiver (-I for a framed quiver).
class MutationTrace {
 public:
  explicit MutationTrace(StepRecord seed);

  std::size_t steps() const noexcept { return records_.size() - 1; }
  std::size_t nvars() const noexcept { return records_.front().f.nvars(); }
  const StepRecord& operator[](std::size_t k) const { return records_.at(k); }
  std::span<const StepRecord> records() const noexcept { return records_; }

  /// Appends a record, assigning it the next index.
  void push(StepRecord record);

 private:
  std::vector<StepRecord> records_;
};

/// (product over arrows j -> k of label_j + product over arrows k -> j of label_j) / label_k,
/// where frozen vertex n+i carries the label y_i.
Polynomial exchange_label(const Quiver& q, std::span<const Polynomial> labels, std::size_t k);

/// A framed quiver with its current mutable labels, advanced one step at a time.
class MutationRun {
 public:
  MutationRun(Quiver initial, std::vector<std::size_t> sequence, TwoCyclePolicy policy);

  /// Performs the next mutation of the sequence and returns its record.
  /// Throws InvariantViolation if the new label is not an F-polynomial shape
  /// (constant term 1, positive coefficients) or the C-matrix is not unimodular.
  StepRecord advance();

  std::size_t step() const noexcept { return step_; }
  const Quiver& quiver() const noexcept { return quiver_; }
  std::span<const Polynomial> labels() const noexcept { return labels_; }

 private:
  Quiver quiver_;
  std::vector<std::size_t> sequence_;
  TwoCyclePolicy policy_;
  std::vector<Polynomial> labels_;
  std::size_t step_ = 0;
};

struct RunLimits {
  std::size_t max_steps = 64;
};

MutationTrace run(const Quiver& initial, std::span<const std::size_t> sequence,
                  TwoCyclePolicy policy, std::size_t steps, RunLimits limits = {});
MutationTrace run(const Preset& preset, std::size_t steps, RunLimits limits = {});

/// Steps offset, offset+stride, ... of `trace`, reindexed 1, 2, ...; the seed is kept.
MutationTrace subsample(const MutationTrace& trace, std::size_t offset, std::size_t stride);

/// Throws InvariantViolation unless f has constant term 1 and only positive coefficients.
void check_f_polynomial_shape(const Polynomial& f, std::size_t step);

}  // namespace stabcv
