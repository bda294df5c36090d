#include "brachi/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_map>

#include "brachi/errors.hpp"
#include "brachi/reference.hpp"
#include "brachi/segment.hpp"
#include "brachi/solver.hpp"

namespace brachi {

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

ProblemSpec RunConfig::problem() const {
  ProblemSpec spec{a, b, g, 0.0};
  spec.validate();
  return spec;
}

GridSpec RunConfig::grid() const {
  if (quad_steps < 1) throw ValidationError("quad-steps must be at least 1");
  if (threads < 1) throw ValidationError("threads must be at least 1");
  return GridSpec::make(problem(), n_x, n_y, GridOptions{y_min, u_limit});
}

ComparisonReport compare(const RunConfig& config) {
  const GridSpec grid = config.grid();
  const Solution solution = solve(grid, SolveOptions{config.threads});
  const YProfile y_dp = extract_y_profile(solution.policy, grid);
  const UProfile u_dp = extract_u_profile(solution.policy, grid);

  ComparisonReport report;
  report.cycloid = solve_params(config.a, config.b);
  const std::vector<double> y_cyc = sample_profile(report.cycloid, grid);

  report.t_dp = solution.total_time;
  report.t_star = optimal_time(report.cycloid, config.g);
  report.t_chord = evaluate_u_profile(u_from_y_profile(y_cyc), grid.problem().y_start, grid);

  report.rows.reserve(grid.n_x());
  for (int k = 0; k < grid.n_x(); ++k) {
    ProfileRow row;
    row.k = k;
    row.x = grid.x_value(GridIndex{k + 1});
    row.y_dp = y_dp.heights[k];
    if (k < grid.stages()) row.u_dp = u_dp.controls[k];
    row.y_cycloid = y_cyc[k];
    report.max_dev = std::max(report.max_dev, std::abs(row.y_dp - row.y_cycloid));
    report.rows.push_back(row);
  }
  return report;
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace

void write_profile_csv(const ComparisonReport& report, const std::filesystem::path& path) {
  auto out = open_output(path);
  out << "k,x,y_dp,u_dp,y_cycloid\n";
  for (const ProfileRow& row : report.rows) {
    out << row.k << ',' << format_number(row.x) << ',' << format_number(row.y_dp) << ','
        << (row.u_dp ? format_number(*row.u_dp) : "") << ',' << format_number(row.y_cycloid) << '\n';
  }
  finish(out, path);
}

void write_report_csv(const ComparisonReport& report, const RunConfig& config, const std::filesystem::path& path) {
  const GridSpec grid = config.grid();
  auto out = open_output(path);
  const std::pair<const char*, double> fields[] = {
      {"a", config.a},
      {"b", config.b},
      {"g", config.g},
      {"nx", static_cast<double>(grid.n_x())},
      {"ny", static_cast<double>(grid.n_y())},
      {"dx", grid.dx()},
      {"dy", grid.dy()},
      {"y_min", grid.y_min()},
      {"u_min", grid.u_min()},
      {"u_max", grid.u_max()},
      {"t_dp", report.t_dp},
      {"t_star", report.t_star},
      {"t_chord", report.t_chord},
      {"max_dev", report.max_dev},
      {"theta_max", report.cycloid.theta_max},
      {"r", report.cycloid.r},
  };
  out << "quantity,value\n";
  for (const auto& [name, value] : fields) out << name << ',' << format_number(value) << '\n';
  finish(out, path);
}

void write_compare_svg(const ComparisonReport& report, const RunConfig& config, const std::filesystem::path& path) {
  constexpr double kWidth = 800.0;
  constexpr double kHeight = 500.0;
  constexpr double kLeft = 70.0;
  constexpr double kRight = 30.0;
  constexpr double kTop = 40.0;
  constexpr double kBottom = 60.0;
  constexpr int kCurveSamples = 400;
  constexpr int kTicks = 5;

  double y_lo = 0.0;
  for (const ProfileRow& row : report.rows) y_lo = std::min({y_lo, row.y_dp, row.y_cycloid});
  for (int i = 0; i <= kCurveSamples; ++i) {
    y_lo = std::min(y_lo, report.cycloid.y_at(report.cycloid.theta_max * i / kCurveSamples));
  }
  const double y_hi = 0.05 * -y_lo;
  y_lo *= 1.05;
  const double x_lo = 0.0;
  const double x_hi = config.a;

  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * (kWidth - kLeft - kRight); };
  auto py = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * (kHeight - kTop - kBottom); };
  auto num = [](double v) { return format_number(std::round(v * 100.0) / 100.0); };

  auto out = open_output(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n";
  out << "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";

  // axes box, ticks and labels
  out << "<g stroke=\"black\" fill=\"none\" stroke-width=\"1\">\n";
  out << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(kWidth - kLeft - kRight)
      << "\" height=\"" << num(kHeight - kTop - kBottom) << "\"/>\n";
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double x = x_lo + (x_hi - x_lo) * i / kTicks;
    const double y = y_lo + (y_hi - y_lo) * i / kTicks;
    out << "<line x1=\"" << num(px(x)) << "\" y1=\"" << num(kHeight - kBottom) << "\" x2=\"" << num(px(x))
        << "\" y2=\"" << num(kHeight - kBottom + 5) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(px(x)) << "\" y=\"" << num(kHeight - kBottom + 20)
        << "\" text-anchor=\"middle\">" << format_number(std::round(x * 100.0) / 100.0) << "</text>\n";
    out << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(py(y)) << "\" x2=\"" << num(kLeft) << "\" y2=\""
        << num(py(y)) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(py(y) + 4) << "\" text-anchor=\"end\">"
        << format_number(std::round(y * 100.0) / 100.0) << "</text>\n";
  }
  out << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - 15) << "\" text-anchor=\"middle\">x</text>\n";
  out << "<text x=\"20\" y=\"" << num(kHeight / 2) << "\" text-anchor=\"middle\">y</text>\n";
  out << "</g>\n";

  out << "<polyline fill=\"none\" stroke=\"red\" stroke-width=\"2\" points=\"";
  for (int i = 0; i <= kCurveSamples; ++i) {
    const double theta = report.cycloid.theta_max * i / kCurveSamples;
    out << (i ? " " : "") << num(px(report.cycloid.x_at(theta))) << ',' << num(py(report.cycloid.y_at(theta)));
  }
  out << "\"/>\n";

  out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    out << (i ? " " : "") << num(px(report.rows[i].x)) << ',' << num(py(report.rows[i].y_dp));
  }
  out << "\"/>\n<g fill=\"none\" stroke=\"black\">\n";
  for (const ProfileRow& row : report.rows) {
    out << "<circle cx=\"" << num(px(row.x)) << "\" cy=\"" << num(py(row.y_dp)) << "\" r=\"3\"/>\n";
  }
  out << "</g>\n</svg>\n";
  finish(out, path);
}

ComparisonReport cmd_solve(const RunConfig& config) {
  ComparisonReport report = compare(config);
  std::filesystem::create_directories(config.out);
  write_profile_csv(report, config.out / "profile.csv");
  write_report_csv(report, config, config.out / "report.csv");
  if (config.plot) write_compare_svg(report, config, config.out / "compare.svg");
  return report;
}

std::vector<ConvergenceRow> cmd_convergence(const RunConfig& config, int levels) {
  if (levels < 2) throw ValidationError("convergence needs at least 2 levels, got " + std::to_string(levels));
  GridSpec grid = config.grid();
  const double t_star = optimal_time(solve_params(config.a, config.b), config.g);

  std::vector<ConvergenceRow> rows;
  for (int level = 0; level < levels; ++level) {
    if (level > 0) grid = grid.refined();
    const double t_dp = solve(grid, SolveOptions{config.threads}).total_time;
    rows.push_back({grid.n_x(), grid.n_y(), t_dp, t_dp - t_star});
  }

  std::filesystem::create_directories(config.out);
  const auto path = config.out / "convergence.csv";
  auto out = open_output(path);
  out << "n_x,n_y,t_dp,gap\n";
  for (const ConvergenceRow& row : rows) {
    out << row.n_x << ',' << row.n_y << ',' << format_number(row.t_dp) << ',' << format_number(row.gap) << '\n';
  }
  finish(out, path);
  return rows;
}

Golden Golden::builtin() {
  Golden golden;
  golden.a = reference::kA;
  golden.b = reference::kB;
  golden.g = reference::kG;
  golden.n_x = reference::kNx;
  golden.n_y = reference::kNy;
  const auto heights = reference::cycloid_heights();
  golden.heights.assign(heights.begin(), heights.end());
  golden.t_star = reference::golden_optimal_time();
  golden.t_dp = reference::golden_dp_time();
  return golden;
}

Golden Golden::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open golden file " + path.string());
  std::unordered_map<std::string, std::string> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError(path.string() + ":" + std::to_string(line_no) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }

  auto need = [&](const std::string& key) -> const std::string& {
    const auto it = entries.find(key);
    if (it == entries.end()) throw ValidationError(path.string() + ": missing key '" + key + "'");
    return it->second;
  };
  auto number = [&](const std::string& key, const std::string& text) {
    try {
      std::size_t used = 0;
      const double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v;
    } catch (const std::exception&) {
      throw ValidationError(path.string() + ": bad number for '" + key + "': " + text);
    }
  };

  Golden golden;
  golden.a = number("a", need("a"));
  golden.b = number("b", need("b"));
  golden.g = number("g", need("g"));
  golden.n_x = static_cast<int>(number("nx", need("nx")));
  golden.n_y = static_cast<int>(number("ny", need("ny")));
  golden.t_star = number("t_star", need("t_star"));
  if (entries.count("t_dp")) golden.t_dp = number("t_dp", entries["t_dp"]);
  std::stringstream list(need("heights"));
  std::string item;
  while (std::getline(list, item, ',')) golden.heights.push_back(number("heights", item));
  if (golden.heights.size() != static_cast<std::size_t>(golden.n_x)) {
    throw ValidationError(path.string() + ": expected " + std::to_string(golden.n_x) + " heights, got " +
                          std::to_string(golden.heights.size()));
  }
  return golden;
}

namespace {

double relative(double value, double expected) { return std::abs(value - expected) / std::abs(expected); }

template <typename Body>
CheckResult run_check(const std::string& name, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::string("error: ") + e.what()};
  }
}

}  // namespace

std::vector<CheckResult> cmd_verify(const RunConfig& config, const Golden& golden) {
  std::vector<CheckResult> results;

  results.push_back(run_check("segment_quadrature", [&] {
    constexpr int kSegments = 50;
    constexpr double kTol = 1e-6;
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> height(-10.0, -1e-3);
    std::uniform_real_distribution<double> width(0.05, 1.0);
    double worst = 0.0;
    for (int i = 0; i < kSegments; ++i) {
      const double y = height(rng);
      const double u = height(rng) - y;
      const double dx = width(rng);
      const double exact = segment_time(y, u, dx, config.g).seconds();
      worst = std::max(worst, relative(segment_time_quadrature(y, u, dx, config.g, config.quad_steps), exact));
    }
    return CheckResult{"segment_quadrature", worst <= kTol,
                       "max_rel_err=" + format_number(worst) + " tol=" + format_number(kTol) +
                           " steps=" + std::to_string(config.quad_steps)};
  }));

  results.push_back(run_check("cycloid_time", [&] {
    constexpr double kTol = 1e-4;
    const CycloidParams p = solve_params(config.a, config.b);
    const double err = relative(optimal_time_quadrature(p, config.g), optimal_time(p, config.g));
    return CheckResult{"cycloid_time", err <= kTol, "rel_err=" + format_number(err) + " tol=" + format_number(kTol)};
  }));

  results.push_back(run_check("reference_table", [&] {
    constexpr double kHeightTol = 5e-5;
    constexpr double kTimeTol = 1e-6;
    const GridSpec grid = GridSpec::make(ProblemSpec{golden.a, golden.b, golden.g, 0.0}, golden.n_x, golden.n_y);
    const CycloidParams p = solve_params(golden.a, golden.b);
    const std::vector<double> heights = sample_profile(p, grid);
    double worst = 0.0;
    for (std::size_t k = 0; k < heights.size(); ++k) worst = std::max(worst, std::abs(heights[k] - golden.heights.at(k)));
    const double t_star_err = relative(optimal_time(p, golden.g), golden.t_star);
    bool passed = worst <= kHeightTol && t_star_err <= kTimeTol;
    std::string detail = "max_height_err=" + format_number(worst) + " t_star_rel_err=" + format_number(t_star_err);
    if (golden.t_dp) {
      const double t_dp_err = relative(solve(grid, SolveOptions{config.threads}).total_time, *golden.t_dp);
      passed = passed && t_dp_err <= kTimeTol;
      detail += " t_dp_rel_err=" + format_number(t_dp_err);
    }
    return CheckResult{"reference_table", passed, detail};
  }));

  // The remaining checks share one solve of the configured instance.
  std::optional<Solution> solution;
  std::optional<GridSpec> grid;
  try {
    grid = config.grid();
    solution = solve(*grid, SolveOptions{config.threads});
  } catch (const std::exception& e) {
    for (const char* name : {"bellman", "rollout", "lower_bound"}) {
      results.push_back({name, false, std::string("error: ") + e.what()});
    }
    return results;
  }

  results.push_back(run_check("bellman", [&] {
    const BellmanCheck check = check_bellman(*solution, *grid);
    return CheckResult{"bellman", check.violations == 0,
                       "states=" + std::to_string(check.checked_states) + " violations=" +
                           std::to_string(check.violations) + " max_rel_err=" + format_number(check.max_relative_error)};
  }));

  results.push_back(run_check("rollout", [&] {
    constexpr double kTol = 1e-9;
    const UProfile u = extract_u_profile(solution->policy, *grid);
    const YProfile y = extract_y_profile(solution->policy, *grid);
    const double err = relative(evaluate_u_profile(u.controls, grid->problem().y_start, *grid), solution->total_time);
    const bool ends = std::abs(y.heights.back() - config.b) < grid->epsilon();
    return CheckResult{"rollout", err <= kTol && ends,
                       "rel_err=" + format_number(err) + " y_end=" + format_number(y.heights.back())};
  }));

  results.push_back(run_check("lower_bound", [&] {
    const double t_star = optimal_time(solve_params(config.a, config.b), config.g);
    return CheckResult{"lower_bound", solution->total_time >= t_star - 1e-9,
                       "t_dp=" + format_number(solution->total_time) + " t_star=" + format_number(t_star)};
  }));

  return results;
}

}  // namespace brachi
