#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "brachi/cycloid.hpp"
#include "brachi/grid.hpp"

namespace brachi {

/// Everything a CLI run needs. Defaults reproduce the reference experiment.
struct RunConfig {
  double a = 10.0;
  double b = -5.0;
  double g = 9.81;
  int n_x = 41;
  int n_y = 101;
  std::optional<double> y_min;
  std::optional<double> u_limit;
  std::filesystem::path out = ".";
  bool plot = true;
  std::int64_t quad_steps = 1'000'000;
  unsigned threads = 1;

  ProblemSpec problem() const;
  /// Validates the whole configuration; throws ValidationError.
  GridSpec grid() const;
};

struct ProfileRow {
  int k = 0;
  double x = 0.0;
  double y_dp = 0.0;
  std::optional<double> u_dp;  ///< empty on the last row
  double y_cycloid = 0.0;
};

struct ComparisonReport {
  double t_dp = 0.0;     ///< backward-induction optimum on the grid
  double t_star = 0.0;   ///< continuous optimum along the cycloid
  double t_chord = 0.0;  ///< piecewise-linear path through the cycloid heights at x_k
  double max_dev = 0.0;  ///< max_k |y_dp(x_k) - y_cycloid(x_k)|
  CycloidParams cycloid;
  std::vector<ProfileRow> rows;
};

/// Runs solver and cycloid oracle; no files touched.
ComparisonReport compare(const RunConfig& config);

/// `k,x,y_dp,u_dp,y_cycloid`, one row per x sample.
void write_profile_csv(const ComparisonReport& report, const std::filesystem::path& path);
/// `quantity,value` pairs: instance, grid, times, deviation, cycloid constants.
void write_report_csv(const ComparisonReport& report, const RunConfig& config,
                      const std::filesystem::path& path);
/// Grid solution as circles joined by segments over the cycloid polyline.
void write_compare_svg(const ComparisonReport& report, const RunConfig& config,
                       const std::filesystem::path& path);

/// compare() plus profile.csv, report.csv and (if config.plot) compare.svg in config.out.
ComparisonReport cmd_solve(const RunConfig& config);

struct ConvergenceRow {
  int n_x = 0;
  int n_y = 0;
  double t_dp = 0.0;
  double gap = 0.0;  ///< t_dp - t_star
};

/// Solves `levels` nested grids starting at the configured one, each halving
/// both steps, and writes convergence.csv. Throws ValidationError for levels < 2.
std::vector<ConvergenceRow> cmd_convergence(const RunConfig& config, int levels);

/// Reference values the verify command checks against.
struct Golden {
  double a = 0.0;
  double b = 0.0;
  double g = 0.0;
  int n_x = 0;
  int n_y = 0;
  std::vector<double> heights;  ///< cycloid heights at the grid abscissae
  double t_star = 0.0;
  std::optional<double> t_dp;

  /// Built-in reference instance.
  static Golden builtin();
  /// key=value file with keys a, b, g, nx, ny, heights (comma separated), t_star, t_dp (optional).
  static Golden load(const std::filesystem::path& path);
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Oracle checks: segment formula against quadrature, cycloid time against
/// quadrature, golden table and times, Bellman consistency, roll-out
/// consistency and the continuous lower bound.
std::vector<CheckResult> cmd_verify(const RunConfig& config, const Golden& golden);

/// Formats with 9 significant digits, as used in every CSV.
std::string format_number(double value);

}  // namespace brachi
