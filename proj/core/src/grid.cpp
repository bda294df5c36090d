#include "brachi/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "brachi/errors.hpp"

namespace brachi {

namespace {

bool on_lattice(double steps) {
  return std::abs(steps - std::nearbyint(steps)) <= 1e-9 * std::max(1.0, std::abs(steps));
}

GridIndex nearest_index(double position, int count) {
  // nearbyint honours the default rounding mode: ties to even.
  const auto i = static_cast<int>(std::nearbyint(position));
  return GridIndex{std::clamp(i, 1, count)};
}

void check_index(GridIndex i, int count, const char* axis) {
  if (i.value < 1 || i.value > count) {
    throw OutOfRange(std::string(axis) + " index " + std::to_string(i.value) + " outside [1, " +
                     std::to_string(count) + "]");
  }
}

void check_range(double v, double lo, double hi, double eps, const char* axis) {
  if (!(v >= lo - eps && v <= hi + eps)) {
    throw OutOfRange(std::string(axis) + " = " + std::to_string(v) + " outside [" + std::to_string(lo) +
                     ", " + std::to_string(hi) + "]");
  }
}

}  // namespace

void ProblemSpec::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) throw ValidationError("a must be positive, got " + std::to_string(a));
  if (!(b < 0.0) || !std::isfinite(b)) throw ValidationError("b must be negative, got " + std::to_string(b));
  if (!(g > 0.0) || !std::isfinite(g)) throw ValidationError("g must be positive, got " + std::to_string(g));
  if (!(y_start <= 0.0)) throw ValidationError("y_start must not be above 0, got " + std::to_string(y_start));
}

double ProblemSpec::epsilon() const { return 1e-9 * std::max(1.0, std::abs(b)); }

GridSpec GridSpec::make(const ProblemSpec& problem, int n_x, int n_y, const GridOptions& options) {
  problem.validate();
  if (n_x < 2) throw ValidationError("n_x must be at least 2, got " + std::to_string(n_x));
  if (n_y < 3) throw ValidationError("n_y must be at least 3, got " + std::to_string(n_y));

  GridSpec grid;
  grid.problem_ = problem;
  grid.options_ = options;
  grid.n_x_ = n_x;
  grid.n_y_ = n_y;
  grid.eps_ = problem.epsilon();
  grid.y_min_ = options.y_min.value_or(2.0 * problem.b);

  if (!options.y_min && n_y % 2 == 0) {
    throw ValidationError("n_y must be odd so that b lies on the height grid, got " + std::to_string(n_y));
  }
  if (!(grid.y_min_ <= problem.b)) {
    throw ValidationError("y_min must not be above b, got " + std::to_string(grid.y_min_));
  }

  grid.dx_ = problem.a / (n_x - 1);
  grid.dy_ = -grid.y_min_ / (n_y - 1);

  if (!on_lattice((problem.b - grid.y_min_) / grid.dy_)) {
    throw ValidationError("b is not on the height grid");
  }

  const double u_limit = options.u_limit.value_or(-problem.b);
  if (!(u_limit > 0.0)) throw ValidationError("u_limit must be positive, got " + std::to_string(u_limit));
  const double half = u_limit / grid.dy_;
  if (!on_lattice(half) || std::nearbyint(half) < 1.0) {
    throw ValidationError("u_limit must be a positive multiple of dy");
  }
  grid.n_u_ = 2 * static_cast<int>(std::nearbyint(half)) + 1;
  grid.u_min_ = -u_limit;
  grid.u_max_ = u_limit;
  return grid;
}

GridIndex GridSpec::y_index(double y) const {
  check_range(y, y_min_, 0.0, eps_, "y");
  return nearest_index(1.0 + (y - y_min_) / dy_, n_y_);
}

double GridSpec::y_value(GridIndex i) const {
  check_index(i, n_y_, "y");
  // Same affine map as y_min + (i - 1) dy, but exact at 0 and at the midpoint.
  return y_min_ * static_cast<double>(n_y_ - i.value) / (n_y_ - 1);
}

GridIndex GridSpec::u_index(double u) const {
  check_range(u, u_min_, u_max_, eps_, "u");
  return nearest_index(1.0 + (u - u_min_) / dy_, n_u_);
}

double GridSpec::u_value(GridIndex i) const {
  check_index(i, n_u_, "u");
  // Symmetric form keeps the centre control exactly 0 (the level-segment branch).
  return u_max_ * static_cast<double>(2 * i.value - n_u_ - 1) / (n_u_ - 1);
}

GridIndex GridSpec::x_index(double x) const {
  check_range(x, 0.0, problem_.a, eps_, "x");
  return nearest_index(1.0 + x / dx_, n_x_);
}

double GridSpec::x_value(GridIndex k) const {
  check_index(k, n_x_, "x");
  return problem_.a * static_cast<double>(k.value - 1) / (n_x_ - 1);
}

bool GridSpec::is_admissible(double y, int stage) const {
  if (stage < 1 || stage > stages()) {
    throw OutOfRange("stage " + std::to_string(stage) + " outside [1, " + std::to_string(stages()) + "]");
  }
  if (stage == stages()) return std::abs(y - problem_.b) < eps_;
  return y >= y_min_ - eps_ && y <= eps_;
}

GridSpec GridSpec::refined() const { return make(problem_, 2 * n_x_ - 1, 2 * n_y_ - 1, options_); }

}  // namespace brachi
