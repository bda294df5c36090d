// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brachi/cycloid.hpp"
#include "brachi/reference.hpp"
#include "brachi/report.hpp"
#include "brachi/segment.hpp"
#include "brachi/solver.hpp"
#include "oracles.hpp"

namespace {

using namespace brachi;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;
  std::function<Outcome()> body;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double relative(double value, double expected) { return std::abs(value - expected) / std::abs(expected); }

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome cycloid_parameters() {
  const CycloidParams p = solve_params(10.0, -5.0);
  const bool ok = std::abs(p.theta_max - 3.50837) <= 1e-4 && std::abs(p.r - 2.586) <= 1e-3;
  return {ok, "theta_max=" + num(p.theta_max) + " r=" + num(p.r)};
}

Outcome table_reproduction() {
  const CycloidParams p = solve_params(10.0, -5.0);
  const GridSpec grid = GridSpec::make(ProblemSpec{}, 41, 101);
  const std::vector<double> heights = sample_profile(p, grid);
  const auto table = reference::cycloid_heights();
  double worst = 0.0;
  for (std::size_t k = 0; k < table.size(); ++k) worst = std::max(worst, std::abs(heights[k] - table[k]));
  return {heights.size() == 41 && worst <= 5e-5, "points=" + std::to_string(heights.size()) + " max_abs_err=" + num(worst)};
}

Outcome formula_vs_quadrature() {
  constexpr double g = 9.81;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> height(-10.0, -1e-3);
  std::uniform_real_distribution<double> width(0.05, 1.0);
  double worst = 0.0;
  double misprint_best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 1000; ++i) {
    const double y = height(rng);
    const double u = height(rng) - y;
    const double dx = width(rng);
    const double quad = segment_time_quadrature(y, u, dx, g, 1'000'000);
    worst = std::max(worst, relative(segment_time(y, u, dx, g).seconds(), quad));
    // displayed variant: (dx^2 + u^2) / u in place of sqrt(dx^2 + u^2) / u, with a leading minus
    const double misprint = -std::sqrt(2 / g) * ((dx * dx + u * u) / u) * (std::sqrt(-y) - std::sqrt(-(u + y)));
    misprint_best = std::min(misprint_best, relative(misprint, quad));
  }
  const bool ok = worst <= 1e-6 && misprint_best > 1e-6;
  return {ok, "segments=1000 max_rel_err=" + num(worst) + " misprinted_form_min_rel_err=" + num(misprint_best)};
}

Outcome brute_force_equivalence() {
  double worst = 0.0;
  int instances = 0;
  for (int n_x = 2; n_x <= 5; ++n_x) {
    for (int n_y = 3; n_y <= 21; n_y += 2) {
      const double brute = test::brute_force_time(10.0, -5.0, 9.81, n_x, n_y);
      const double dp = solve(GridSpec::make(ProblemSpec{}, n_x, n_y)).total_time;
      worst = std::max(worst, relative(dp, brute));
      ++instances;
    }
  }
  return {worst <= 1e-12, "instances=" + std::to_string(instances) + " max_rel_err=" + num(worst)};
}

Outcome paper_scale() {
  const GridSpec grid = GridSpec::make(ProblemSpec{}, 41, 101);
  const Solution solution = solve(grid);
  const CycloidParams p = solve_params(10.0, -5.0);
  const double t_star_quad = optimal_time_quadrature(p, 9.81);
  const double t_star = optimal_time(p, 9.81);
  const UProfile u = extract_u_profile(solution.policy, grid);
  const double rollout = evaluate_u_profile(u.controls, 0.0, grid);
  const double t_dp = solution.total_time;
  const bool ok = t_dp >= t_star - 1e-9 && std::abs(t_star_quad - 1.8013) <= 1e-3 &&
                  std::abs(t_star - 1.8013) <= 1e-3 && relative(rollout, t_dp) <= 1e-9 &&
                  relative(t_dp, reference::golden_dp_time()) <= 1e-12;
  return {ok, "t_dp=" + num(t_dp) + " t_star=" + num(t_star) + " t_star_quadrature=" + num(t_star_quad) +
                  " rollout_rel_err=" + num(relative(rollout, t_dp)) + " golden=" + num(reference::golden_dp_time())};
}

Outcome refinement() {
  const double t_star = optimal_time(solve_params(10.0, -5.0), 9.81);
  GridSpec grid = GridSpec::make(ProblemSpec{}, 11, 21);
  std::vector<double> times;
  std::string detail;
  for (int level = 0; level <= 3; ++level) {
    if (level > 0) grid = grid.refined();
    times.push_back(solve(grid).total_time);
    detail += (level ? " " : "") + std::to_string(grid.n_x()) + "x" + std::to_string(grid.n_y()) + ":gap=" +
              num(times.back() - t_star);
  }
  bool ok = true;
  for (std::size_t i = 0; i < times.size(); ++i) {
    ok = ok && times[i] - t_star > 0.0;
    if (i > 0) ok = ok && times[i] <= times[i - 1] + 1e-9 && times[i] - t_star < times[i - 1] - t_star;
  }
  return {ok, detail};
}

Outcome determinism() {
  const auto root = std::filesystem::temp_directory_path() / "brachi_acceptance";
  std::filesystem::remove_all(root);
  RunConfig first;
  first.out = root / "run1";
  RunConfig second;
  second.out = root / "run2";
  cmd_solve(first);
  cmd_solve(second);
  const bool profile = slurp(first.out / "profile.csv") == slurp(second.out / "profile.csv");
  const bool report = slurp(first.out / "report.csv") == slurp(second.out / "report.csv");
  const bool nonempty = !slurp(first.out / "profile.csv").empty();
  return {profile && report && nonempty,
          std::string("profile.csv ") + (profile ? "identical" : "differs") + ", report.csv " +
              (report ? "identical" : "differs")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "cycloid parameters", 1e-3, cycloid_parameters},
      {"AC2", "table reproduction", 10e-3, table_reproduction},
      {"AC3", "formula vs quadrature", 30.0, formula_vs_quadrature},
      {"AC4", "brute-force equivalence", 10.0, brute_force_equivalence},
      {"AC5", "lower bound and roll-out at reference scale", 5.0, paper_scale},
      {"AC6", "nested refinement", 120.0, refinement},
      {"AC7", "determinism", 60.0, determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = elapsed < c.time_limit_s;
    const bool passed = outcome.passed && in_time;
    failures += passed ? 0 : 1;
    std::printf("[%s] %s %s: %s (%.3g s, limit %.3g s%s)\n", passed ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                outcome.detail.c_str(), elapsed, c.time_limit_s, in_time ? "" : ", exceeded");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
