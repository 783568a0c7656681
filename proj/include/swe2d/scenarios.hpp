#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "swe2d/boundary.hpp"
#include "swe2d/stepper.hpp"

namespace swe {

struct Gauge {
  std::string label;
  double x = 0.0, y = 0.0;
};

/// Everything needed to set up a run: domain, bottom, initial state, boundary
/// conditions per side tag, roughness, and the default output schedule. The initial
/// state is expressed against the discrete bathymetry so that states meant to be
/// steady are steady for the discretization, not just for the continuous problem.
struct ScenarioConfig {
  std::string name;
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  int default_nx = 1, default_ny = 1;
  DiagonalPattern pattern = DiagonalPattern::alternating;

  std::function<double(double, double)> bathymetry;
  std::function<void(const Mesh&, const BathymetryField&, CellStateField&)> initial_state;
  BoundaryMap boundary;

  double g = 9.81;
  double n_manning = 0.0;
  double t_end = 1.0;
  std::vector<Gauge> gauges;
  std::vector<double> snapshot_times;
};

/// Reference cell-mean solution for scenarios that have one.
struct ExactSolution {
  std::function<double(double, double)> h, qx, qy;
};

enum class FlowRegime { supercritical, subcritical };
enum class FlowAxis { x, y };

struct SteadySlopeSetup {
  ScenarioConfig config;
  ExactSolution exact;
  double h0 = 0.0;      ///< normal depth of the balanced state
  double q0 = 0.0;      ///< unit discharge along the slope
  double froude = 0.0;  ///< q0 / (h0 * sqrt(g h0))
};

/// Uniform flow down a constant slope where gravity and Manning friction balance:
/// the depth h0 = (n^2 q0^2 / S)^(3/10) stays constant along the channel. The
/// supercritical variant uses q0 = 0.02, n = 0.01; the subcritical one q0 = 0.1,
/// n = 0.05; both on the slope S = 0.015. `axis` orients the channel along x or y.
SteadySlopeSetup steady_slope_scenario(FlowRegime regime, FlowAxis axis = FlowAxis::x);

/// Laboratory dam break over a dry, partly sloping flume (7 m x 1 m, bed rising
/// 1:10 from x = 3.4 m, dam at x = 2.25 m holding 0.25 m of water), with gauges
/// G1..G4 along the centerline.
ScenarioConfig dam_break_scenario();

enum class SolitaryWaveKind { breaking, nonbreaking };

/// Solitary wave running up a 1:19.85 plane beach (still-water shoreline at x = 0,
/// offshore depth 1 m). `breaking` launches amplitude 0.3 at x = 14, `nonbreaking`
/// amplitude 0.0185 at x = 38.5; both waves travel toward the beach.
ScenarioConfig solitary_runup_scenario(SolitaryWaveKind kind, double slope_toe = 19.85);

/// Periodic waves shoaling on a 1:35 slope (offshore depth 0.4 m at the slope toe),
/// forced at the offshore boundary. If `series_csv` is empty a sinusoidal signal
/// with height 0.115 m and period 2.2 s is used.
ScenarioConfig periodic_wave_scenario(const std::string& series_csv = "");

/// Solitary wave around a conical island (25 m x 30 m basin, island base diameter
/// 7.2 m, top diameter 2.2 m, height 0.625 m, still water 0.32 m). `ratio` is the
/// wave height relative to the depth (0.1 or 0.2 in the experiments).
ScenarioConfig conical_island_scenario(double ratio);

/// Solitary wave entering a bay whose beach varies in the alongshore direction:
/// B = -hs for x < Ls, B = -hs + 0.4 (x - Ls) / (3 + cos(pi y / Ls)) beyond, with
/// hs = 1.02 m, Ls = 8 m on [0, 30] x [-8, 8].
ScenarioConfig complex_beach_scenario();

struct ErrorNorms {
  double l1 = 0.0, l2 = 0.0, linf = 0.0;
};

/// Area-weighted norms of (field - exact) over cell means:
/// L1 = sum |e_j| |T_j|, L2 = sqrt(sum e_j^2 |T_j|), Linf = max |e_j|.
/// `exact` is evaluated at cell centroids.
ErrorNorms error_norms(const std::vector<double>& field,
                       const std::function<double(double, double)>& exact, const Mesh& mesh);

}  // namespace swe
