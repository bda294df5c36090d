#include "brachi/cycloid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "brachi/errors.hpp"

namespace brachi {

namespace {

constexpr int kMaxBisections = 80;
constexpr double kThetaGuard = 1e-9;

double one_minus_cos(double theta) {
  const double s = std::sin(0.5 * theta);
  return 2.0 * s * s;
}

// theta - sin(theta) without cancellation near 0.
double theta_minus_sin(double theta) {
  if (std::abs(theta) < 0.1) {
    const double t2 = theta * theta;
    return theta * t2 / 6.0 * (1.0 - t2 / 20.0 * (1.0 - t2 / 42.0 * (1.0 - t2 / 72.0)));
  }
  return theta - std::sin(theta);
}

// Strictly decreasing on (0, 2 pi).
double ratio(double theta) { return one_minus_cos(theta) / theta_minus_sin(theta); }

}  // namespace

double CycloidParams::x_at(double theta) const { return r * theta_minus_sin(theta); }

double CycloidParams::y_at(double theta) const { return -r * one_minus_cos(theta); }

CycloidParams solve_params(double a, double b, double tol) {
  if (!(a > 0.0)) throw ValidationError("cycloid end point needs a > 0");
  if (!(b < 0.0)) throw ValidationError("cycloid end point needs b < 0");
  if (!(tol > 0.0 && tol <= 1e-3)) throw ValidationError("tolerance must lie in (0, 1e-3]");

  const double target = -b / a;
  double lo = kThetaGuard;
  double hi = 2.0 * std::numbers::pi - kThetaGuard;
  if (!(ratio(lo) > target && ratio(hi) < target)) {
    throw NoBracket("cannot bracket the cycloid angle for b / a = " + std::to_string(b / a));
  }
  for (int i = 0; i < kMaxBisections; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (ratio(mid) > target ? lo : hi) = mid;
  }

  CycloidParams p;
  p.theta_max = 0.5 * (lo + hi);
  p.r = -b / one_minus_cos(p.theta_max);

  const double x_residual = std::abs(p.end_x() - a) / a;
  const double y_residual = std::abs(p.y_at(p.theta_max) - b) / -b;
  if (x_residual > tol || y_residual > tol) {
    throw Error("cycloid residuals " + std::to_string(x_residual) + ", " + std::to_string(y_residual) +
                " exceed tolerance");
  }
  return p;
}

double theta_at_x(const CycloidParams& p, double x) {
  const double end = p.end_x();
  const double eps = 1e-9 * std::max(1.0, end);
  if (!(x >= -eps && x <= end + eps)) {
    throw OutOfRange("x = " + std::to_string(x) + " outside the cycloid arc [0, " + std::to_string(end) + "]");
  }
  if (x <= 0.0) return 0.0;
  if (x >= end) return p.theta_max;
  double lo = 0.0;
  double hi = p.theta_max;
  for (int i = 0; i < kMaxBisections && hi - lo > 1e-12 * std::max(1e-3, lo); ++i) {
    const double mid = 0.5 * (lo + hi);
    (p.x_at(mid) < x ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double y_at_x(const CycloidParams& p, double x) { return p.y_at(theta_at_x(p, x)); }

std::vector<double> sample_profile(const CycloidParams& p, const GridSpec& grid) {
  std::vector<double> heights;
  heights.reserve(grid.n_x());
  for (int k = 1; k <= grid.n_x(); ++k) heights.push_back(y_at_x(p, grid.x_value(GridIndex{k})));
  return heights;
}

std::vector<double> u_from_y_profile(std::span<const double> heights) {
  if (heights.size() < 2) throw ValidationError("a profile needs at least two heights");
  std::vector<double> controls;
  controls.reserve(heights.size() - 1);
  for (std::size_t k = 0; k + 1 < heights.size(); ++k) controls.push_back(heights[k + 1] - heights[k]);
  return controls;
}

double optimal_time(const CycloidParams& p, double g) { return std::sqrt(p.r / g) * p.theta_max; }

double optimal_time_quadrature(const CycloidParams& p, double g, std::int64_t steps) {
  if (steps < 1) throw ValidationError("quadrature needs at least one step");
  const double s_end = std::cbrt(p.end_x());
  const double h = s_end / static_cast<double>(steps);
  double sum = 0.0;
  for (std::int64_t i = 0; i < steps; ++i) {
    const double s = (static_cast<double>(i) + 0.5) * h;
    const double x = s * s * s;
    const double theta = theta_at_x(p, x);
    const double drop = one_minus_cos(theta);
    const double slope = std::sin(theta) / drop;  // |dy/dx|
    const double depth = p.r * drop;              // -y
    sum += std::sqrt(1.0 + slope * slope) / std::sqrt(2.0 * g * depth) * 3.0 * s * s;
  }
  return sum * h;
}

}  // namespace brachi
