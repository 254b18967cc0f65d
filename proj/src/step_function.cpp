#include "specdens/step_function.hpp"

#include <algorithm>

#include "specdens/errors.hpp"

namespace specdens {

long long StepFunction::operator()(double x) const {
  auto it = std::upper_bound(jump_points.begin(), jump_points.end(), x);
  return values[static_cast<size_t>(it - jump_points.begin())];
}

void StepFunction::check() const {
  if (values.size() != jump_points.size() + 1)
    throw Error("step function: values/jump_points size mismatch");
  for (size_t i = 0; i < jump_points.size(); ++i) {
    if (jump_points[i] < 0.0) throw Error("step function: negative jump point");
    if (i > 0 && jump_points[i] <= jump_points[i - 1])
      throw Error("step function: jump points not strictly increasing");
  }
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[i - 1]) throw Error("step function: not nondecreasing");
}

StepFunction gap_function(const StepFunction& f) {
  StepFunction g = f;
  const long long base = f.initial_value();
  for (auto& v : g.values) v -= base;
  return g;
}

}  // namespace specdens
