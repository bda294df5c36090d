#pragma once

#include <compare>
#include <cstdint>

namespace brachi {

/// A travel time in seconds, or the marker for a path that cannot be taken.
///
/// Infeasible orders after every finite value and absorbs addition, so a
/// minimum over candidates never picks it while a finite option exists.
class TravelTime {
 public:
  constexpr TravelTime() = default;

  static constexpr TravelTime finite(double seconds) { return TravelTime(seconds, true); }
  static constexpr TravelTime infeasible() { return TravelTime(0.0, false); }

  constexpr bool is_finite() const noexcept { return finite_; }
  /// Undefined for infeasible values; check is_finite() first.
  constexpr double seconds() const noexcept { return seconds_; }

  friend constexpr TravelTime operator+(TravelTime lhs, TravelTime rhs) {
    if (!lhs.finite_ || !rhs.finite_) return infeasible();
    return finite(lhs.seconds_ + rhs.seconds_);
  }

  friend constexpr bool operator==(TravelTime lhs, TravelTime rhs) {
    if (lhs.finite_ != rhs.finite_) return false;
    return !lhs.finite_ || lhs.seconds_ == rhs.seconds_;
  }

  friend constexpr std::partial_ordering operator<=>(TravelTime lhs, TravelTime rhs) {
    if (lhs.finite_ && rhs.finite_) return lhs.seconds_ <=> rhs.seconds_;
    if (lhs.finite_) return std::partial_ordering::less;
    if (rhs.finite_) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
  }

 private:
  constexpr TravelTime(double seconds, bool finite) : seconds_(seconds), finite_(finite) {}

  double seconds_ = 0.0;
  bool finite_ = false;
};

/// Time across one straight segment; finite values are strictly positive.
using SegmentTime = TravelTime;

/// Speed after falling from 0 to height y: sqrt(-2 g y). Throws NegativeEnergy for y > 0.
double speed_at(double y, double g);

/// Time to traverse the straight segment from (0, y) to (dx, y + u), starting
/// from rest at height 0.
///
/// Infeasible when y > 0, y + u > 0, or y = u = 0 (never leaves the start).
/// Otherwise
///   u = 0:  dx / sqrt(-2 g y)
///   u != 0: sqrt(2/g) * sqrt(dx^2 + u^2) / u * (sqrt(-y) - sqrt(-(y + u)))
/// The u != 0 branch is evaluated in the rationalized form
///   sqrt(2/g) * sqrt(dx^2 + u^2) / (sqrt(-y) + sqrt(-(y + u)))
/// which is the same quantity without the cancellation for small |u|.
SegmentTime segment_time(double y, double u, double dx, double g);

/// Composite midpoint rule for the same segment, integrating ds / v over x.
/// Midpoints keep the integrand finite when the segment starts at y = 0.
/// Throws InfeasibleSegment for a segment segment_time rejects, ValidationError for steps < 1.
double segment_time_quadrature(double y, double u, double dx, double g, std::int64_t steps);

}  // namespace brachi
