#include "brachi/segment.hpp"

#include <cmath>
#include <string>

#include "brachi/errors.hpp"

namespace brachi {

double speed_at(double y, double g) {
  if (y > 0.0) throw NegativeEnergy("height " + std::to_string(y) + " is above the start level");
  return std::sqrt(-2.0 * g * y);
}

SegmentTime segment_time(double y, double u, double dx, double g) {
  if (y > 0.0 || y + u > 0.0 || (y == 0.0 && u == 0.0)) return SegmentTime::infeasible();
  if (u == 0.0) return SegmentTime::finite(dx / std::sqrt(-2.0 * g * y));
  const double length = std::hypot(dx, u);
  const double end = std::max(0.0, -(y + u));
  return SegmentTime::finite(std::sqrt(2.0 / g) * length / (std::sqrt(-y) + std::sqrt(end)));
}

double segment_time_quadrature(double y, double u, double dx, double g, std::int64_t steps) {
  if (steps < 1) throw ValidationError("quadrature needs at least one step");
  if (!segment_time(y, u, dx, g).is_finite()) {
    throw InfeasibleSegment("segment from y = " + std::to_string(y) + " with u = " + std::to_string(u) +
                            " cannot be traversed");
  }
  const double slope = u / dx;
  const double stretch = std::sqrt(1.0 + slope * slope);
  const double h = dx / static_cast<double>(steps);
  double sum = 0.0;
  double carry = 0.0;  // Kahan compensation
  for (std::int64_t i = 0; i < steps; ++i) {
    const double x = (static_cast<double>(i) + 0.5) * h;
    const double term = stretch / std::sqrt(-2.0 * g * (y + slope * x)) - carry;
    const double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return sum * h;
}

}  // namespace brachi
