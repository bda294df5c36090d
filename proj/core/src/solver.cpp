#include "brachi/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "brachi/errors.hpp"

namespace brachi {

Policy::Policy(int stages, int states)
    : stages_(stages), states_(states), table_(static_cast<std::size_t>(stages) * states) {}

std::size_t Policy::offset(int stage, GridIndex state) const {
  if (stage < 1 || stage > stages_ || state.value < 1 || state.value > states_) {
    throw OutOfRange("policy entry (" + std::to_string(stage) + ", " + std::to_string(state.value) +
                     ") outside the table");
  }
  return static_cast<std::size_t>(stage - 1) * states_ + (state.value - 1);
}

std::optional<double> Policy::control(int stage, GridIndex state) const { return table_[offset(stage, state)]; }

void Policy::set(int stage, GridIndex state, double u) { table_[offset(stage, state)] = u; }

ValueTable::ValueTable(int stages, int states)
    : values_(static_cast<std::size_t>(stages) + 1, ValueFunction(states, TravelTime::infeasible())) {
  values_.back().assign(states, TravelTime::finite(0.0));
}

const ValueFunction& ValueTable::at(int stage) const {
  if (stage < 1 || stage > stages() + 1) throw OutOfRange("value stage " + std::to_string(stage));
  return values_[stage - 1];
}

ValueFunction& ValueTable::at(int stage) {
  if (stage < 1 || stage > stages() + 1) throw OutOfRange("value stage " + std::to_string(stage));
  return values_[stage - 1];
}

namespace {

struct Choice {
  TravelTime value = TravelTime::infeasible();
  std::optional<int> u_index;
};

// Ascending scan over controls with strict improvement: the smallest u wins ties.
Choice best_choice(const GridSpec& grid, int stage, GridIndex state, const ValueFunction& next) {
  const double y = grid.y_value(state);
  const double dx = grid.dx();
  const double g = grid.problem().g;
  Choice best;
  for (int j = 1; j <= grid.n_u(); ++j) {
    const double u = grid.u_value(GridIndex{j});
    const double y_next = y + u;
    if (!grid.is_admissible(y_next, stage)) continue;
    const TravelTime candidate = segment_time(y, u, dx, g) + next[grid.y_index(y_next).value - 1];
    if (candidate < best.value) {
      best.value = candidate;
      best.u_index = j;
    }
  }
  return best;
}

void sweep_stage(const GridSpec& grid, int stage, int first, int last, const ValueFunction& next,
                 ValueFunction& current, Policy& policy) {
  for (int i = first; i <= last; ++i) {
    const Choice choice = best_choice(grid, stage, GridIndex{i}, next);
    current[i - 1] = choice.value;
    if (choice.u_index) policy.set(stage, GridIndex{i}, grid.u_value(GridIndex{*choice.u_index}));
  }
}

}  // namespace

Solution solve(const GridSpec& grid, const SolveOptions& options) {
  const ProblemSpec& problem = grid.problem();
  const GridIndex start = grid.y_index(problem.y_start);
  if (std::abs(grid.y_value(start) - problem.y_start) > grid.epsilon()) {
    throw ValidationError("y_start " + std::to_string(problem.y_start) + " is not on the height grid");
  }

  const int states = grid.n_y();
  Solution solution{Policy(grid.stages(), states), ValueTable(grid.stages(), states), 0.0};
  const unsigned workers = std::clamp(options.threads, 1u, static_cast<unsigned>(states));

  for (int stage = grid.stages(); stage >= 1; --stage) {
    const ValueFunction& next = solution.values.at(stage + 1);
    ValueFunction& current = solution.values.at(stage);
    if (workers == 1) {
      sweep_stage(grid, stage, 1, states, next, current, solution.policy);
      continue;
    }
    // Each worker owns a disjoint block of states, so the schedule cannot change the result.
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const int block = (states + static_cast<int>(workers) - 1) / static_cast<int>(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const int first = 1 + static_cast<int>(w) * block;
      const int last = std::min(states, first + block - 1);
      if (first > last) break;
      pool.emplace_back([&, stage, first, last] {
        sweep_stage(grid, stage, first, last, next, current, solution.policy);
      });
    }
  }

  const TravelTime total = solution.values.at(1)[start.value - 1];
  if (!total.is_finite()) {
    throw NoFeasiblePath("no admissible path reaches (" + std::to_string(problem.a) + ", " +
                         std::to_string(problem.b) + ") under the control bounds");
  }
  solution.total_time = total.seconds();
  return solution;
}

namespace {

template <typename Visit>
void roll_out(const Policy& policy, const GridSpec& grid, Visit&& visit) {
  double y = grid.problem().y_start;
  for (int stage = 1; stage <= grid.stages(); ++stage) {
    const std::optional<double> u = policy.control(stage, grid.y_index(y));
    if (!u) {
      throw InfeasibleRollout("no control stored for y = " + std::to_string(y) + " at stage " +
                                  std::to_string(stage),
                              stage);
    }
    y += *u;
    visit(*u, y);
  }
}

}  // namespace

YProfile extract_y_profile(const Policy& policy, const GridSpec& grid) {
  YProfile profile;
  profile.heights.reserve(grid.n_x());
  profile.heights.push_back(grid.problem().y_start);
  roll_out(policy, grid, [&](double, double y) { profile.heights.push_back(y); });
  return profile;
}

UProfile extract_u_profile(const Policy& policy, const GridSpec& grid) {
  UProfile profile;
  profile.controls.reserve(grid.stages());
  roll_out(policy, grid, [&](double u, double) { profile.controls.push_back(u); });
  return profile;
}

double evaluate_u_profile(std::span<const double> controls, double y_start, const GridSpec& grid) {
  if (controls.size() != static_cast<std::size_t>(grid.stages())) {
    throw ValidationError("expected " + std::to_string(grid.stages()) + " controls, got " +
                          std::to_string(controls.size()));
  }
  double total = 0.0;
  double y = y_start;
  for (std::size_t k = 0; k < controls.size(); ++k) {
    const SegmentTime t = segment_time(y, controls[k], grid.dx(), grid.problem().g);
    if (!t.is_finite()) {
      const int stage = static_cast<int>(k) + 1;
      throw InfeasibleSegment("segment at stage " + std::to_string(stage) + " from y = " + std::to_string(y) +
                                  " with u = " + std::to_string(controls[k]) + " cannot be traversed",
                              stage);
    }
    total += t.seconds();
    y += controls[k];
  }
  return total;
}

BellmanCheck check_bellman(const Solution& solution, const GridSpec& grid, double rel_tol) {
  BellmanCheck report;
  for (int stage = 1; stage <= grid.stages(); ++stage) {
    const ValueFunction& stored = solution.values.at(stage);
    const ValueFunction& next = solution.values.at(stage + 1);
    for (int i = 1; i <= grid.n_y(); ++i) {
      const double y = grid.y_value(GridIndex{i});
      TravelTime best = TravelTime::infeasible();
      for (int j = 1; j <= grid.n_u(); ++j) {
        const double u = grid.u_value(GridIndex{j});
        if (!grid.is_admissible(y + u, stage)) continue;
        best = std::min(best, segment_time(y, u, grid.dx(), grid.problem().g) + next[grid.y_index(y + u).value - 1],
                        [](TravelTime l, TravelTime r) { return l < r; });
      }
      const TravelTime have = stored[i - 1];
      ++report.checked_states;
      if (best.is_finite() != have.is_finite()) {
        ++report.violations;
        continue;
      }
      if (!best.is_finite()) continue;
      const double err = std::abs(best.seconds() - have.seconds()) / std::max(best.seconds(), 1e-300);
      report.max_relative_error = std::max(report.max_relative_error, err);
      if (err > rel_tol) ++report.violations;

      // The stored control must reproduce the stored value.
      const std::optional<double> u = solution.policy.control(stage, GridIndex{i});
      if (!u) {
        ++report.violations;
        continue;
      }
      const TravelTime via = segment_time(y, *u, grid.dx(), grid.problem().g) + next[grid.y_index(y + *u).value - 1];
      if (!via.is_finite() || std::abs(via.seconds() - have.seconds()) > rel_tol * have.seconds()) ++report.violations;
    }
  }
  return report;
}

}  // namespace brachi
