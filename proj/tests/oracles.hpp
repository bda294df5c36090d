#pragma once

// Independent reference computations used only by the tests.

#include <cmath>
#include <limits>
#include <vector>

namespace brachi::test {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Straight-segment time exactly as the reference R routine writes it.
inline double reference_time_step(double u, double y, double dx, double g) {
  if (y > 0 || y + u > 0 || (y == 0 && u == 0)) return kInf;
  if (u == 0) return dx / std::sqrt(-2 * g * y);
  const double s = std::sqrt(dx * dx + u * u);
  return std::sqrt(2 / g) * (s / u) * (std::sqrt(-y) - std::sqrt(-(u + y)));
}

// Exhaustive minimum over every sequence of grid controls for an instance on
// the default grid (floor 2b, controls in [b, -b], shared step). Heights are
// accumulated along the path, independent of the solver's index maps.
inline double brute_force_time(double a, double b, double g, int n_x, int n_y) {
  const int stages = n_x - 1;
  const double dx = a / stages;
  const double dy = 2 * -b / (n_y - 1);
  const double eps = 1e-9 * std::max(1.0, std::abs(b));

  std::vector<int> pick(stages, 0);
  double best = kInf;
  while (true) {
    double y = 0.0;
    double total = 0.0;
    for (int k = 0; k < stages && total < kInf; ++k) {
      const double u = b + pick[k] * dy;
      const double next = y + u;
      const bool ok = (k == stages - 1) ? std::abs(next - b) < eps : (next >= 2 * b - eps && next <= eps);
      total = ok ? total + reference_time_step(u, y, dx, g) : kInf;
      y = next;
    }
    best = std::min(best, total);

    int k = 0;
    while (k < stages && ++pick[k] == n_y) pick[k++] = 0;
    if (k == stages) break;
  }
  return best;
}

}  // namespace brachi::test
