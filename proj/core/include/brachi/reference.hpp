#pragma once

#include <span>

namespace brachi::reference {

// Published reference instance: (a, b) = (10, -5), g = 9.81, 41 x samples, 101 y samples.
inline constexpr double kA = 10.0;
inline constexpr double kB = -5.0;
inline constexpr double kG = 9.81;
inline constexpr int kNx = 41;
inline constexpr int kNy = 101;

// Cycloid constants for the reference instance, rounded as published.
inline constexpr double kThetaMax = 3.50837;
inline constexpr double kRadius = 2.586;

/// Cycloid heights at x = 0, 0.25, ..., 10 for the reference instance, as published.
std::span<const double> cycloid_heights();

/// Regression goldens computed by this library for the reference instance.
double golden_dp_time();
double golden_optimal_time();

}  // namespace brachi::reference
