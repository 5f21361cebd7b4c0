#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gnsent/entropy.hpp"
#include "gnsent/presets.hpp"

namespace gnsent {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitGoldenMismatch = 1,
  kExitValidation = 2,
  kExitNumerical = 3,
};

/// A scenario file, e.g.
///
///   {
///     "ambient_dim": 3,
///     "algebra": {"preset": "ex3_choice2"},
///     "state": {"parameters": {"theta": 0.4}},
///     "method": "both", "seed": 7, "log_base": "natural",
///     "tolerance": {"rank": 1e-10}
///   }
///
/// The algebra is either {"preset": name} or {"generators": [M, ...],
/// "include_unit": bool}; the state is {"vector": v}, {"density": M} or
/// {"parameters": {...}} (presets only; omitted state means preset
/// defaults). Complex numbers are [re, im] pairs; matrices are row-major,
/// either as a list of rows or as one flat list of D^2 entries.
struct ScenarioSpec {
  std::optional<Eigen::Index> ambient_dim;
  std::optional<Preset> preset;
  std::vector<CMatrix> generators;
  bool include_unit = true;

  enum class StateKind { vector, density, parameters };
  StateKind state_kind = StateKind::parameters;
  CVector vector;
  CMatrix density;
  ParameterMap parameters;

  RestrictionOptions options;
  LogBase log_base = LogBase::natural;
};

ScenarioSpec parse_scenario(const nlohmann::json& doc);
ScenarioSpec load_scenario(const std::filesystem::path& path);

Complex parse_complex(const nlohmann::json& value);
CVector parse_vector(const nlohmann::json& value);
CMatrix parse_matrix(const nlohmann::json& value, std::optional<Eigen::Index> dim = std::nullopt);
nlohmann::json matrix_to_json(const CMatrix& m);

/// Algebra and state named by a scenario, validated against each other.
struct ResolvedScenario {
  OperatorSpan algebra;
  AlgebraState state;
  std::optional<StateFamily> family;  // presets only
  ParameterMap parameters;
};
ResolvedScenario resolve(const ScenarioSpec& spec);

RestrictionReport run(const ScenarioSpec& spec);

nlohmann::json report_to_json(const RestrictionReport& report, LogBase base = LogBase::natural);

struct SweepRow {
  double parameter = 0;
  double entropy_nats = 0;
  double entropy_bits = 0;
  Eigen::Index gns_dim = 0;
  Eigen::Index null_dim = 0;
};

/// `steps` grid points from `from` to `to` inclusive; a single row when
/// from == to or steps == 1.
std::vector<SweepRow> sweep(const ScenarioSpec& spec, const std::string& parameter, double from,
                            double to, int steps);

struct GridRow {
  double x = 0;
  double y = 0;
  double entropy = 0;
};

/// Inverse stereographic projection from the north pole of the parameter
/// sphere: returns (sin t cos p, sin t sin p, cos t) for plane point (x, y).
std::array<double, 3> sphere_point(double x, double y);

/// Boson-example entropy on a resolution x resolution grid over
/// [-extent, extent]^2 of the stereographic plane, y-major.
std::vector<GridRow> grid(int resolution, double extent = 2.0,
                          const RestrictionOptions& options = {},
                          LogBase base = LogBase::natural);

void write_sweep_csv(std::ostream& out, const std::string& parameter,
                     const std::vector<SweepRow>& rows);
void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows);

/// Closed forms used as golden values.
double binary_entropy(double p);
double boson_closed_form_entropy(double theta, double phi);

struct ExampleCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the canonical parameter set of worked example 1..5 against
/// embedded golden values.
std::vector<ExampleCheck> run_example(int number, const RestrictionOptions& options = {});

}  // namespace gnsent
