#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "brachi/grid.hpp"

namespace brachi {

/// Cycloid x = r (theta - sin theta), y = -r (1 - cos theta) from the origin to
/// (a, b), reached at theta = theta_max.
struct CycloidParams {
  double r = 0.0;
  double theta_max = 0.0;

  double x_at(double theta) const;
  double y_at(double theta) const;
  double end_x() const { return x_at(theta_max); }
};

/// Solves (1 - cos theta) / (theta - sin theta) = -b / a by bisection on
/// [1e-9, 2 pi - 1e-9], then r = -b / (1 - cos theta).
/// Throws ValidationError for a <= 0, b >= 0 or tol outside (0, 1e-3],
/// NoBracket if the ratio cannot be bracketed, Error if the residuals exceed tol.
CycloidParams solve_params(double a, double b, double tol = 1e-10);

/// Roll angle at which the curve reaches abscissa x. Throws OutOfRange.
double theta_at_x(const CycloidParams& p, double x);

/// Height of the curve at abscissa x. Throws OutOfRange.
double y_at_x(const CycloidParams& p, double x);

/// Curve heights at the grid abscissae x_k = k dx, k = 0 .. n_x - 1.
std::vector<double> sample_profile(const CycloidParams& p, const GridSpec& grid);

/// Consecutive differences y_{k+1} - y_k. Throws ValidationError for fewer than two heights.
std::vector<double> u_from_y_profile(std::span<const double> heights);

/// Descent time along the cycloid from rest: sqrt(r / g) * theta_max.
double optimal_time(const CycloidParams& p, double g);

/// Descent time by integrating ds / v over x along the curve with the
/// midpoint rule after the substitution x = s^3, which removes the integrable
/// x^(-2/3) singularity at the start. Uses only the curve geometry, not the
/// closed-form time.
double optimal_time_quadrature(const CycloidParams& p, double g, std::int64_t steps = 100000);

}  // namespace brachi
