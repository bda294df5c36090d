#include "brachi/reference.hpp"

#include <array>

namespace brachi::reference {

namespace {

constexpr std::array<double, 41> kHeights = {
    0,        -0.86755, -1.34679, -1.73084, -2.05946, -2.34941, -2.60981, -2.84634, -3.06283,
    -3.26204, -3.44602, -3.61637, -3.77433, -3.92094, -4.05702, -4.18327, -4.30028, -4.40854,
    -4.50848, -4.60047, -4.68481, -4.76179, -4.83164, -4.89456, -4.95074, -5.00031, -5.04342,
    -5.08018, -5.11067, -5.13497, -5.15315, -5.16523, -5.17125, -5.17123, -5.16517, -5.15304,
    -5.13483, -5.11049, -5.07995, -5.04316, -5.0,
};

}  // namespace

std::span<const double> cycloid_heights() { return kHeights; }

// Backward induction on the reference grid.
double golden_dp_time() { return 1.8108517308229333; }

// sqrt(r / g) * theta_max; agrees with quadrature of ds / v to about 2e-11.
double golden_optimal_time() { return 1.8012954830137193; }

}  // namespace brachi::reference
