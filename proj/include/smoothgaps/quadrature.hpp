#pragma once

#include <functional>
#include <span>
#include <vector>

namespace smoothgaps {

// Pairwise (cascade) summation: deterministic and bit-stable across reruns
// regardless of how the values were produced.
double pairwise_sum(std::span<const double> values);

// Composite Simpson on [a, b] starting at step <= max_step, with internal
// halving (trapezoid refinement, Simpson by Richardson) until successive
// estimates agree to rel_tol or max_levels is hit.
double integrate_simpson(const std::function<double(double)>& f, double a, double b,
                         double max_step, double rel_tol = 1e-9, int max_levels = 12);

}  // namespace smoothgaps
