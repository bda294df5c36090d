// brachi: discretized brachistochrone by backward induction, compared with the cycloid.
//
//   brachi solve        [options]   -> profile.csv, report.csv, compare.svg
//   brachi convergence  [options] --levels N   -> convergence.csv
//   brachi verify       [options] [--golden FILE]
//
// Exit status: 0 success, 1 validation error, 2 infeasible instance, 3 verification failure.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "brachi/errors.hpp"
#include "brachi/report.hpp"

namespace {

enum ExitCode : int { kOk = 0, kInvalid = 1, kInfeasible = 2, kVerifyFailed = 3 };

void print_report(const brachi::ComparisonReport& report, const brachi::RunConfig& config) {
  using brachi::format_number;
  std::cout << "t_dp     " << format_number(report.t_dp) << " s\n"
            << "t_star   " << format_number(report.t_star) << " s\n"
            << "t_chord  " << format_number(report.t_chord) << " s\n"
            << "max_dev  " << format_number(report.max_dev) << " m\n"
            << "cycloid  r=" << format_number(report.cycloid.r)
            << " theta_max=" << format_number(report.cycloid.theta_max) << '\n'
            << "wrote    " << (config.out / "profile.csv").string() << ", " << (config.out / "report.csv").string()
            << (config.plot ? ", " + (config.out / "compare.svg").string() : std::string()) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brachistochrone by backward induction over a grid, checked against the cycloid"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; command-line flags take precedence");

  brachi::RunConfig config;
  std::string out = config.out.string();
  double y_min = 0.0;
  double u_limit = 0.0;
  app.add_option("-a", config.a, "horizontal end point [m]")->capture_default_str();
  app.add_option("-b", config.b, "vertical end point [m], negative")->capture_default_str();
  app.add_option("-g", config.g, "gravitational acceleration [m/s^2]")->capture_default_str();
  app.add_option("--nx", config.n_x, "number of x samples")->capture_default_str();
  app.add_option("--ny", config.n_y, "number of y samples (odd unless --ymin is given)")->capture_default_str();
  auto* y_min_opt = app.add_option("--ymin", y_min, "floor of the height grid (default 2b)");
  auto* u_limit_opt = app.add_option("--ulimit", u_limit, "control range [-ulimit, ulimit] (default |b|)");
  app.add_option("--out", out, "output directory")->capture_default_str();
  app.add_option("--plot", config.plot, "write compare.svg")->capture_default_str();
  app.add_option("--quad-steps", config.quad_steps, "midpoint steps for the segment oracle")->capture_default_str();
  app.add_option("--threads", config.threads, "worker threads per stage sweep")->capture_default_str();

  auto* solve_cmd = app.add_subcommand("solve", "solve the reference comparison and write CSV/SVG artifacts");
  auto* conv_cmd = app.add_subcommand("convergence", "solve nested refinements and write convergence.csv");
  int levels = 3;
  conv_cmd->add_option("--levels", levels, "number of grids, each halving both steps")->capture_default_str();
  auto* verify_cmd = app.add_subcommand("verify", "run the oracle checks; exit 3 on any failure");
  std::string golden_path;
  verify_cmd->add_option("--golden", golden_path, "golden file (key=value); built-in reference by default");
  for (auto* sub : {solve_cmd, conv_cmd, verify_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  config.out = out;
  if (*y_min_opt) config.y_min = y_min;
  if (*u_limit_opt) config.u_limit = u_limit;

  try {
    config.grid();  // validate before any computation

    if (*solve_cmd) {
      print_report(brachi::cmd_solve(config), config);
    } else if (*conv_cmd) {
      std::cout << "n_x,n_y,t_dp,gap\n";
      for (const auto& row : brachi::cmd_convergence(config, levels)) {
        std::cout << row.n_x << ',' << row.n_y << ',' << brachi::format_number(row.t_dp) << ','
                  << brachi::format_number(row.gap) << '\n';
      }
    } else if (*verify_cmd) {
      const auto golden = golden_path.empty() ? brachi::Golden::builtin() : brachi::Golden::load(golden_path);
      bool all = true;
      std::cout << "check,status,detail\n";
      for (const auto& check : brachi::cmd_verify(config, golden)) {
        std::cout << check.name << ',' << (check.passed ? "PASS" : "FAIL") << ',' << check.detail << '\n';
        all = all && check.passed;
      }
      return all ? kOk : kVerifyFailed;
    }
  } catch (const brachi::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const brachi::NoFeasiblePath& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}
