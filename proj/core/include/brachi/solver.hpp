#pragma once

#include <optional>
#include <span>
#include <vector>

#include "brachi/grid.hpp"
#include "brachi/segment.hpp"

namespace brachi {

// Stages are 1-based: stage k covers [x_{k-1}, x_k] in 0-based x coordinates,
// i.e. it is entered at grid x index k. There are n_x - 1 stages.

/// Optimal control per (stage, height). Empty entries mark states from which
/// the terminal condition is unreachable.
class Policy {
 public:
  Policy() = default;
  Policy(int stages, int states);

  int stages() const noexcept { return stages_; }
  int states() const noexcept { return states_; }

  std::optional<double> control(int stage, GridIndex state) const;
  void set(int stage, GridIndex state, double u);

 private:
  std::size_t offset(int stage, GridIndex state) const;

  int stages_ = 0;
  int states_ = 0;
  std::vector<std::optional<double>> table_;
};

/// Cost-to-go of every height at one stage.
using ValueFunction = std::vector<TravelTime>;

/// Cost-to-go per stage. Stage n_x is the terminal stage, zero everywhere;
/// feasibility of the end point is enforced by the last stage's admissibility test.
class ValueTable {
 public:
  ValueTable() = default;
  ValueTable(int stages, int states);

  const ValueFunction& at(int stage) const;
  ValueFunction& at(int stage);
  int stages() const noexcept { return static_cast<int>(values_.size()) - 1; }

 private:
  std::vector<ValueFunction> values_;  // index 0 is stage 1
};

struct YProfile {
  std::vector<double> heights;  ///< y at x_0 .. x_{n_x-1}
};

struct UProfile {
  std::vector<double> controls;  ///< u applied at stages 1 .. n_x-1
};

struct Solution {
  Policy policy;
  ValueTable values;
  double total_time = 0.0;  ///< cost-to-go at stage 1 from y_start
};

struct SolveOptions {
  /// Worker threads per stage sweep. Results are bit-identical for any count.
  unsigned threads = 1;
};

/// Backward induction over the stages of the deterministic influence diagram.
///
/// For each stage k = n_x-1 .. 1 and each height y, picks the control u
/// minimizing segment_time(y, u) + V_{k+1}(y + u) over successors accepted by
/// GridSpec::is_admissible. Controls are scanned in ascending order and only a
/// strict improvement replaces the incumbent, so ties go to the smallest u.
///
/// Throws ValidationError when y_start is off the height grid and
/// NoFeasiblePath when the start state has no finite cost-to-go.
Solution solve(const GridSpec& grid, const SolveOptions& options = {});

/// Forward roll-out of the policy from y_start. Throws InfeasibleRollout.
YProfile extract_y_profile(const Policy& policy, const GridSpec& grid);
UProfile extract_u_profile(const Policy& policy, const GridSpec& grid);

/// Total time of an arbitrary control sequence (one entry per stage, grid
/// membership not required). Throws InfeasibleSegment with the 1-based stage
/// of the first segment that cannot be traversed.
double evaluate_u_profile(std::span<const double> controls, double y_start, const GridSpec& grid);

struct BellmanCheck {
  double max_relative_error = 0.0;
  int checked_states = 0;
  int violations = 0;  ///< states where finiteness disagrees or the error exceeds the tolerance
};

/// Re-derives every stored cost-to-go from its successors and compares.
BellmanCheck check_bellman(const Solution& solution, const GridSpec& grid, double rel_tol = 1e-12);

}  // namespace brachi
