#pragma once

#include <compare>
#include <optional>

namespace brachi {

/// Physical instance: descend from (0, y_start) to (a, b) under gravity g.
struct ProblemSpec {
  double a = 10.0;       ///< horizontal endpoint [m], > 0
  double b = -5.0;       ///< vertical endpoint [m], < 0
  double g = 9.81;       ///< gravitational acceleration [m/s^2], > 0
  double y_start = 0.0;  ///< initial height [m]

  /// Throws ValidationError unless a > 0, b < 0, g > 0 and y_start <= 0.
  void validate() const;

  /// Slack used for range checks and terminal matching: 1e-9 * max(1, |b|).
  double epsilon() const;
};

/// 1-based position on one grid axis.
struct GridIndex {
  int value = 1;
  friend auto operator<=>(const GridIndex&, const GridIndex&) = default;
};

struct GridOptions {
  /// Floor of the height grid; defaults to 2b.
  std::optional<double> y_min;
  /// Half-width of the symmetric control range [-u_limit, u_limit]; defaults to |b|.
  std::optional<double> u_limit;
};

/// Uniform discretization of x, y and the control u.
///
/// The height grid spans [y_min, 0] with n_y points and step dy. Controls share
/// the step dy, so applying any grid control to a grid height lands on another
/// grid height (up to rounding, which the index maps absorb). The x grid has
/// n_x points, i.e. n_x - 1 stages.
///
/// Index maps use nearest-integer rounding with ties to even, which never
/// triggers for on-grid inputs.
class GridSpec {
 public:
  /// Throws ValidationError for n_x < 2, n_y < 3, an even n_y with the default
  /// floor, a floor above b, or a b / u_limit that is not on the dy lattice.
  static GridSpec make(const ProblemSpec& problem, int n_x, int n_y, const GridOptions& options = {});

  const ProblemSpec& problem() const noexcept { return problem_; }
  int n_x() const noexcept { return n_x_; }
  int n_y() const noexcept { return n_y_; }
  int n_u() const noexcept { return n_u_; }
  int stages() const noexcept { return n_x_ - 1; }
  double dx() const noexcept { return dx_; }
  double dy() const noexcept { return dy_; }
  double y_min() const noexcept { return y_min_; }
  double u_min() const noexcept { return u_min_; }
  double u_max() const noexcept { return u_max_; }
  double epsilon() const noexcept { return eps_; }

  GridIndex y_index(double y) const;
  double y_value(GridIndex i) const;
  GridIndex u_index(double u) const;
  double u_value(GridIndex i) const;
  GridIndex x_index(double x) const;
  double x_value(GridIndex k) const;

  /// Whether a successor height is allowed after stage k (1-based, 1..n_x-1).
  /// The last stage must end at b; earlier stages must stay within [y_min, 0].
  bool is_admissible(double y, int stage) const;

  /// Grid with both steps halved: n -> 2n - 1 on each axis, same floor and control range.
  GridSpec refined() const;

 private:
  GridSpec() = default;

  ProblemSpec problem_;
  GridOptions options_;
  int n_x_ = 0;
  int n_y_ = 0;
  int n_u_ = 0;
  double dx_ = 0.0;
  double dy_ = 0.0;
  double y_min_ = 0.0;
  double u_min_ = 0.0;
  double u_max_ = 0.0;
  double eps_ = 0.0;
};

}  // namespace brachi
