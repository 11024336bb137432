#include "smoothgaps/quadrature.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace smoothgaps {

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0;
    for (double v : values) s += v;
    return s;
  }
  std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double integrate_simpson(const std::function<double(double)>& f, double a, double b,
                         double max_step, double rel_tol, int max_levels) {
  if (!(b > a)) return 0.0;
  if (!(max_step > 0)) throw std::invalid_argument("integrate_simpson: max_step must be > 0");

  std::uint64_t n = static_cast<std::uint64_t>(std::ceil((b - a) / max_step));
  if (n < 2) n = 2;

  auto grid_sum = [&](std::uint64_t count, double start, double step) {
    std::vector<double> vals(count);
    for (std::uint64_t i = 0; i < count; ++i) vals[i] = f(start + static_cast<double>(i) * step);
    return pairwise_sum(vals);
  };

  double h = (b - a) / static_cast<double>(n);
  // level-0 trapezoid over n panels
  double trap = h * (0.5 * (f(a) + f(b)) + grid_sum(n - 1, a + h, h));
  double simpson_prev = 0;
  bool have_prev = false;
  for (int level = 0; level < max_levels; ++level) {
    // refine: midpoints of current panels
    double mid = grid_sum(n, a + h / 2, h);
    double trap_next = 0.5 * trap + 0.5 * h * mid;
    double simpson = (4.0 * trap_next - trap) / 3.0;
    if (have_prev &&
        std::abs(simpson - simpson_prev) <= rel_tol * std::max(std::abs(simpson), 1e-300))
      return simpson;
    simpson_prev = simpson;
    have_prev = true;
    trap = trap_next;
    n *= 2;
    h *= 0.5;
  }
  return simpson_prev;
}

}  // namespace smoothgaps
