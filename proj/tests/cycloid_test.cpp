#include "brachi/cycloid.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "brachi/errors.hpp"
#include "brachi/reference.hpp"
#include "brachi/solver.hpp"

namespace brachi {
namespace {

TEST(SolveParams, ReferenceInstance) {
  const CycloidParams p = solve_params(10.0, -5.0);
  EXPECT_NEAR(p.theta_max, 3.50837, 1e-4);
  EXPECT_NEAR(p.r, 2.586, 1e-3);
  EXPECT_NEAR(p.r * (p.theta_max - std::sin(p.theta_max)), 10.0, 1e-6);
  EXPECT_NEAR(-p.r * (1 - std::cos(p.theta_max)), -5.0, 1e-6);
}

TEST(SolveParams, LowestPointAtPi) {
  for (double r0 : {0.01, 0.5, 1.0, 3.7, 250.0}) {
    const CycloidParams p = solve_params(std::numbers::pi * r0, -2.0 * r0);
    EXPECT_NEAR(p.theta_max, std::numbers::pi, 1e-9) << r0;
    EXPECT_NEAR(p.r, r0, 1e-9 * r0) << r0;
  }
}

TEST(SolveParams, ShallowAndSteepEndPoints) {
  for (auto [a, b] : {std::pair{100.0, -0.1}, std::pair{0.01, -10.0}, std::pair{1.0, -1.0}}) {
    const CycloidParams p = solve_params(a, b);
    EXPECT_NEAR(p.end_x(), a, 1e-9 * a) << a << " " << b;
    EXPECT_NEAR(p.y_at(p.theta_max), b, 1e-9 * -b) << a << " " << b;
  }
}

TEST(SolveParams, Errors) {
  EXPECT_THROW(solve_params(0.0, -5.0), ValidationError);
  EXPECT_THROW(solve_params(10.0, 0.0), ValidationError);
  EXPECT_THROW(solve_params(10.0, -5.0, 0.0), ValidationError);
  EXPECT_THROW(solve_params(10.0, -5.0, 1e-2), ValidationError);
  EXPECT_THROW(solve_params(1e-10, -1.0), NoBracket);
  EXPECT_THROW(solve_params(1e30, -1e-10), NoBracket);
}

TEST(YAtX, Examples) {
  const CycloidParams p = solve_params(10.0, -5.0);
  EXPECT_EQ(y_at_x(p, 0.0), 0.0);
  EXPECT_NEAR(y_at_x(p, 0.25), -0.86755, 5e-5);
  EXPECT_NEAR(y_at_x(p, 10.0), -5.0, 1e-6);
  EXPECT_THROW(y_at_x(p, -0.1), OutOfRange);
  EXPECT_THROW(y_at_x(p, 10.1), OutOfRange);
}

TEST(YAtX, BoundaryInterpolation) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> span(0.1, 100.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = span(rng);
    const double b = -span(rng);
    const CycloidParams p = solve_params(a, b);
    ASSERT_NEAR(y_at_x(p, 0.0), 0.0, 1e-6);
    ASSERT_NEAR(y_at_x(p, a), b, 1e-6 * std::max(1.0, -b)) << a << " " << b;
  }
}

TEST(YAtX, ParametrizationIsMonotone) {
  const CycloidParams p = solve_params(10.0, -5.0);
  double previous = p.x_at(0.0);
  for (int i = 1; i <= 1000; ++i) {
    const double x = p.x_at(p.theta_max * i / 1000.0);
    ASSERT_GT(x, previous) << i;
    previous = x;
  }
}

TEST(SampleProfile, ReproducesReferenceTable) {
  const CycloidParams p = solve_params(10.0, -5.0);
  const GridSpec grid = GridSpec::make(ProblemSpec{}, 41, 101);
  const std::vector<double> heights = sample_profile(p, grid);
  const auto table = reference::cycloid_heights();
  ASSERT_EQ(heights.size(), table.size());
  for (std::size_t k = 0; k < table.size(); ++k) EXPECT_NEAR(heights[k], table[k], 5e-5) << "k = " << k;
  EXPECT_NEAR(heights[1], -0.86755, 5e-5);
  EXPECT_NEAR(heights[2], -1.34679, 5e-5);
  EXPECT_NEAR(heights[32], -5.17125, 5e-5);
  EXPECT_EQ(std::min_element(heights.begin(), heights.end()) - heights.begin(), 32);
}

TEST(SampleProfile, EndPointsOnly) {
  const CycloidParams p = solve_params(10.0, -5.0);
  const GridSpec grid = GridSpec::make(ProblemSpec{}, 2, 101);
  const std::vector<double> heights = sample_profile(p, grid);
  ASSERT_EQ(heights.size(), 2u);
  EXPECT_EQ(heights[0], 0.0);
  EXPECT_NEAR(heights[1], -5.0, 1e-9);
}

TEST(UFromYProfile, Differences) {
  EXPECT_EQ(u_from_y_profile(std::vector<double>{0.0, -5.0}), (std::vector<double>{-5.0}));
  const auto u = u_from_y_profile(std::vector<double>{0.0, -0.86755, -1.34679});
  ASSERT_EQ(u.size(), 2u);
  EXPECT_NEAR(u[0], -0.86755, 1e-12);
  EXPECT_NEAR(u[1], -0.47924, 1e-12);
  EXPECT_EQ(u_from_y_profile(std::vector<double>(5, -2.0)), std::vector<double>(4, 0.0));
  EXPECT_THROW(u_from_y_profile(std::vector<double>{1.0}), ValidationError);
}

TEST(OptimalTime, Examples) {
  const CycloidParams p = solve_params(10.0, -5.0);
  EXPECT_NEAR(optimal_time(p, 9.81), 1.80130, 1e-5);
  EXPECT_NEAR(optimal_time(p, 9.81), reference::golden_optimal_time(), 1e-12);

  for (double g : {1.0, 9.81, 24.8}) {
    const CycloidParams unit = solve_params(std::numbers::pi, -2.0);
    EXPECT_NEAR(optimal_time(unit, g), std::numbers::pi / std::sqrt(g), 1e-9);
  }
  const CycloidParams doubled{2 * p.r, p.theta_max};
  EXPECT_NEAR(optimal_time(doubled, 9.81), std::sqrt(2.0) * optimal_time(p, 9.81), 1e-12);
}

TEST(OptimalTime, AgreesWithQuadrature) {
  for (auto [a, b] : {std::pair{10.0, -5.0}, std::pair{1.0, -3.0}, std::pair{7.0, -0.5}}) {
    const CycloidParams p = solve_params(a, b);
    const double closed = optimal_time(p, 9.81);
    EXPECT_NEAR(optimal_time_quadrature(p, 9.81), closed, 1e-4 * closed) << a << " " << b;
  }
  const CycloidParams p = solve_params(10.0, -5.0);
  EXPECT_NEAR(optimal_time_quadrature(p, 9.81), 1.8013, 1e-4);
}

TEST(OptimalTime, ChordPathIsNoFaster) {
  for (int n_x : {2, 3, 5, 11, 41, 161}) {
    const CycloidParams p = solve_params(10.0, -5.0);
    const GridSpec grid = GridSpec::make(ProblemSpec{}, n_x, 101);
    const double chord = evaluate_u_profile(u_from_y_profile(sample_profile(p, grid)), 0.0, grid);
    EXPECT_GE(chord, optimal_time(p, 9.81) - 1e-9) << n_x;
  }
}

}  // namespace
}  // namespace brachi
