#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swe2d/scenarios.hpp"

namespace swe {

/// Fully resolved description of one run: which scenario, on what mesh, with which
/// numeric and output settings. Produced by parse_config; consumed by execute.
struct RunConfig {
  std::string scenario;

  // scenario selectors (each only meaningful for the scenario that uses it)
  std::string regime = "supercritical";  ///< steady_slope: supercritical | subcritical
  std::string axis = "x";                ///< steady_slope: x | y
  std::string kind = "breaking";         ///< solitary_runup: breaking | nonbreaking
  double ratio = 0.2;                    ///< conical_island: wave height / still depth

  // mesh: either a resolution for the built-in generator or a mesh file
  int nx = 0, ny = 0;  ///< 0 = scenario default
  std::string mesh_file;

  // numerics (negative = keep the scenario default)
  double cfl = 0.25;
  double t_end = -1.0;
  double n_manning = -1.0;
  double dt_max = 1.0;
  long max_steps = 50'000'000;

  // outputs
  double gauge_dt = 0.05;            ///< sampling cadence; <= 0 samples every step
  std::vector<Gauge> gauges;         ///< non-empty replaces the scenario's gauges
  std::vector<double> snapshot_times;  ///< non-empty replaces the scenario's times
  std::string snapshot_format = "csv";  ///< csv | vtk
  std::string out_dir;               ///< default <SWE2D_OUT_ROOT or "out">/<scenario>
  std::string forcing_series;        ///< CSV t,w,u,v for forced-inflow scenarios
};

struct NormRow {
  std::string variable;
  ErrorNorms norms;
};

/// What a finished run reports back: bulk statistics, conservation and positivity
/// monitors, the error table for scenarios with a reference solution, and the
/// files written.
struct RunReport {
  std::string scenario;
  int cells = 0;
  RunStats stats;
  double mass_drift_rel = 0.0;
  std::vector<NormRow> norms;
  std::vector<std::string> gauge_files;
  std::vector<std::string> snapshot_files;
  bool monitors_ok = false;
};

/// Names accepted for RunConfig::scenario.
const std::vector<std::string>& scenario_names();

/// Parses "key=value" tokens (leading "--" on a token is allowed and ignored).
/// Unknown keys, malformed values, out-of-range settings and unknown scenarios are
/// reported by name; an empty token list is an error naming the required key.
RunConfig parse_config(const std::vector<std::string>& args);

/// Reads a config file of one "key=value" per line ('#' starts a comment), then
/// applies the override tokens on top.
RunConfig load_config_file(const std::string& path, const std::vector<std::string>& overrides = {});

/// Instantiated scenario: the setup plus the reference solution when one exists.
struct ScenarioInstance {
  ScenarioConfig config;
  std::optional<ExactSolution> exact;
};

/// Builds the scenario a config names, with the config's selectors applied.
ScenarioInstance build_scenario(const RunConfig& cfg);

/// Runs the configured scenario start to finish and writes gauge and snapshot
/// files under the output directory. Solver failures (NaN, lost positivity)
/// propagate as exceptions.
RunReport execute(const RunConfig& cfg);

/// Human-readable multi-line summary of a report.
std::string format_report(const RunReport& report);

}  // namespace swe
