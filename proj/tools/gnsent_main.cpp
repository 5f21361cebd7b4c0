// Command-line front end: run, sweep, grid, example.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#include "gnsent/scenario.hpp"

using namespace gnsent;

namespace {

struct CommonFlags {
  std::string method;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::string log_base;
  std::string out;
};

void add_common(CLI::App* app, CommonFlags& f) {
  app->add_option("--method", f.method, "gns, wedderburn or both");
  app->add_option("--seed", f.seed, "seed for the randomized projections");
  app->add_option("--tol", f.tol, "relative rank tolerance")->check(CLI::PositiveNumber);
  app->add_option("--log-base", f.log_base, "natural or two");
  app->add_option("--out", f.out, "output file (default stdout)");
}

void apply(const CommonFlags& f, RestrictionOptions& opt, LogBase& base) {
  if (!f.method.empty()) opt.method = parse_method(f.method);
  if (f.seed) opt.seed = *f.seed;
  if (f.tol) opt.tol.rank = *f.tol;
  if (!f.log_base.empty()) base = parse_log_base(f.log_base);
}

// Writes to --out when given, otherwise stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw ValidationError("cannot open output file '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement entropy of states restricted to finite-dimensional *-algebras"};
  app.require_subcommand(1);

  std::string scenario_path;
  CommonFlags run_flags;
  auto* run_cmd = app.add_subcommand("run", "evaluate one scenario file, print a JSON report");
  run_cmd->add_option("scenario", scenario_path, "scenario JSON file")->required();
  add_common(run_cmd, run_flags);

  CommonFlags sweep_flags;
  std::string param;
  double from = 0, to = 0;
  int steps = 11;
  auto* sweep_cmd = app.add_subcommand("sweep", "entropy along one preset parameter, CSV");
  sweep_cmd->add_option("scenario", scenario_path, "scenario JSON file")->required();
  sweep_cmd->add_option("--param", param, "parameter name")->required();
  sweep_cmd->add_option("--from", from, "first value")->required();
  sweep_cmd->add_option("--to", to, "last value")->required();
  sweep_cmd->add_option("--steps", steps, "number of points")->check(CLI::PositiveNumber);
  add_common(sweep_cmd, sweep_flags);

  CommonFlags grid_flags;
  int resolution = 41;
  double extent = 2.0;
  auto* grid_cmd = app.add_subcommand("grid", "boson-example entropy on the stereographic plane, CSV");
  grid_cmd->add_option("--resolution", resolution, "points per axis")->check(CLI::Range(2, 2000));
  grid_cmd->add_option("--extent", extent, "half-width of the plane window")->check(CLI::PositiveNumber);
  add_common(grid_cmd, grid_flags);

  CommonFlags example_flags;
  int example = 0;
  auto* example_cmd = app.add_subcommand("example", "check a worked example against golden values");
  example_cmd->add_option("number", example, "1..5")->required()->check(CLI::Range(1, 5));
  add_common(example_cmd, example_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*run_cmd) {
      ScenarioSpec spec = load_scenario(scenario_path);
      apply(run_flags, spec.options, spec.log_base);
      const RestrictionReport report = run(spec);
      Output out(run_flags.out);
      out.stream() << report_to_json(report, spec.log_base).dump(2) << '\n';
    } else if (*sweep_cmd) {
      ScenarioSpec spec = load_scenario(scenario_path);
      apply(sweep_flags, spec.options, spec.log_base);
      const auto rows = sweep(spec, param, from, to, steps);
      Output out(sweep_flags.out);
      write_sweep_csv(out.stream(), param, rows);
    } else if (*grid_cmd) {
      RestrictionOptions opt;
      LogBase base = LogBase::natural;
      apply(grid_flags, opt, base);
      const auto rows = grid(resolution, extent, opt, base);
      Output out(grid_flags.out);
      write_grid_csv(out.stream(), rows);
    } else if (*example_cmd) {
      RestrictionOptions opt;
      LogBase base = LogBase::natural;
      apply(example_flags, opt, base);
      const auto checks = run_example(example, opt);
      Output out(example_flags.out);
      bool all = true;
      for (const auto& c : checks) {
        out.stream() << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        all = all && c.passed;
      }
      out.stream() << "example " << example << ": " << (all ? "ok" : "golden mismatch") << '\n';
      return all ? kExitOk : kExitGoldenMismatch;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}
