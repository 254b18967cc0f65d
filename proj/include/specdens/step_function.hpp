#pragma once

#include <vector>

namespace specdens {

/// Right-continuous nondecreasing integer step function on [0, infinity).
/// values has one entry per interval, including the value before the first
/// jump, so values.size() == jump_points.size() + 1. Evaluation uses the
/// closed convention: at a jump point the new value already counts.
struct StepFunction {
  std::vector<double> jump_points;  // strictly increasing, >= 0
  std::vector<long long> values;    // nondecreasing

  long long operator()(double x) const;

  long long initial_value() const { return values.front(); }
  long long final_value() const { return values.back(); }

  /// Throws Error when the shape invariants are broken.
  void check() const;
};

/// Pointwise difference f - f(0), a step function starting at zero.
StepFunction gap_function(const StepFunction& f);

}  // namespace specdens
