#include "swe2d/scenarios.hpp"

#include <cmath>
#include <numbers>

namespace swe {

namespace {

constexpr double kGravity = 9.81;

double sech2(double x) {
  const double c = std::cosh(x);
  return 1.0 / (c * c);
}

/// Solitary-wave surface profile of height H over depth h0, centered at 0.
double solitary_profile(double xi, double H, double h0) {
  return H * sech2(std::sqrt(3.0 * H / (4.0 * h0 * h0 * h0)) * xi);
}

}  // namespace

SteadySlopeSetup steady_slope_scenario(FlowRegime regime, FlowAxis axis) {
  const double slope = 0.015;
  const double q0 = regime == FlowRegime::supercritical ? 0.02 : 0.1;
  const double n = regime == FlowRegime::supercritical ? 0.01 : 0.05;
  const double h0 = std::pow(n * n * q0 * q0 / slope, 0.3);

  SteadySlopeSetup setup;
  setup.h0 = h0;
  setup.q0 = q0;
  setup.froude = q0 / (h0 * std::sqrt(kGravity * h0));

  ScenarioConfig& c = setup.config;
  c.name = "steady_slope";
  c.n_manning = n;
  c.t_end = 150.0;
  const bool along_x = axis == FlowAxis::x;
  if (along_x) {
    c.x0 = 0.0; c.x1 = 2.5; c.y0 = 0.0; c.y1 = 0.2;
    c.default_nx = 112; c.default_ny = 9;
    c.bathymetry = [slope](double x, double) { return -slope * (x - 2.53); };
  } else {
    c.x0 = 0.0; c.x1 = 0.2; c.y0 = 0.0; c.y1 = 2.5;
    c.default_nx = 9; c.default_ny = 112;
    c.bathymetry = [slope](double, double y) { return -slope * (y - 2.53); };
  }
  c.initial_state = [h0, q0, along_x](const Mesh& mesh, const BathymetryField& bathy,
                                      CellStateField& s) {
    for (int j = 0; j < mesh.n_cells(); ++j) {
      s.w[j] = h0 + bathy.cell_value(j);
      s.qx[j] = along_x ? q0 : 0.0;
      s.qy[j] = along_x ? 0.0 : q0;
    }
  };
  // The balanced flow enters at the shallow end and leaves at the deep end. The
  // inlet prescribes the balanced state itself (a copy condition there is
  // ill-posed: every characteristic enters, and roundoff self-amplifies); the
  // outlet stays transmissive and the lateral sides are free-slip walls.
  const double b_inlet = slope * 2.53;
  const double u0 = q0 / h0;
  ForcingPoint inlet{h0 + b_inlet, along_x ? u0 : 0.0, along_x ? 0.0 : u0};
  for (const char* side : {"left", "right", "bottom", "top"})
    c.boundary[side] = BoundaryCondition::make_wall();
  c.boundary[along_x ? "left" : "bottom"] =
      BoundaryCondition::make_inflow([inlet](double) { return inlet; });
  c.boundary[along_x ? "right" : "top"] = BoundaryCondition::make_outflow();
  c.snapshot_times = {c.t_end};

  setup.exact.h = [h0](double, double) { return h0; };
  setup.exact.qx = [q0, along_x](double, double) { return along_x ? q0 : 0.0; };
  setup.exact.qy = [q0, along_x](double, double) { return along_x ? 0.0 : q0; };
  return setup;
}

ScenarioConfig dam_break_scenario() {
  ScenarioConfig c;
  c.name = "dam_break";
  c.x0 = 0.0; c.x1 = 7.0; c.y0 = 0.0; c.y1 = 1.0;
  c.default_nx = 140; c.default_ny = 20;
  c.n_manning = 0.01;
  c.t_end = 10.0;
  c.bathymetry = [](double x, double) { return x < 3.4 ? 0.0 : (x - 3.4) / 10.0; };
  c.initial_state = [](const Mesh& mesh, const BathymetryField& bathy, CellStateField& s) {
    for (int j = 0; j < mesh.n_cells(); ++j) {
      const double b = bathy.cell_value(j);
      s.w[j] = mesh.geometry(j).cx < 2.25 ? std::max(0.25, b) : b;
      s.qx[j] = 0.0;
      s.qy[j] = 0.0;
    }
  };
  c.boundary["left"] = BoundaryCondition::make_wall();
  c.boundary["bottom"] = BoundaryCondition::make_wall();
  c.boundary["top"] = BoundaryCondition::make_wall();
  c.boundary["right"] = BoundaryCondition::make_outflow();
  c.gauges = {{"G1", 1.4, 0.5}, {"G2", 2.25, 0.5}, {"G3", 3.4, 0.5}, {"G4", 4.5, 0.5}};
  c.snapshot_times = {c.t_end};
  return c;
}

ScenarioConfig solitary_runup_scenario(SolitaryWaveKind kind, double slope_toe) {
  const double h0 = 1.0;
  const double H = kind == SolitaryWaveKind::breaking ? 0.3 : 0.0185;
  const double x_crest = kind == SolitaryWaveKind::breaking ? 14.0 : 38.5;
  const double celerity = std::sqrt(kGravity * (h0 + H));

  ScenarioConfig c;
  c.name = "solitary_runup";
  c.x0 = -20.0; c.x1 = 60.0; c.y0 = 0.0; c.y1 = 1.0;
  c.default_nx = 800; c.default_ny = 5;
  c.n_manning = 0.01;
  c.t_end = kind == SolitaryWaveKind::breaking ? 20.0 : 25.0;
  // Plane beach of slope 1:19.85 meeting the flat offshore bottom at the toe; with
  // the default toe the still-water shoreline sits at x = 0 and land extends to
  // negative x.
  c.bathymetry = [h0, slope_toe](double x, double) {
    return x >= slope_toe ? -h0 : -h0 + (slope_toe - x) / 19.85;
  };
  c.initial_state = [H, h0, x_crest, celerity](const Mesh& mesh, const BathymetryField& bathy,
                                               CellStateField& s) {
    for (int j = 0; j < mesh.n_cells(); ++j) {
      const double b = bathy.cell_value(j);
      const double wave = solitary_profile(mesh.geometry(j).cx - x_crest, H, h0);
      s.w[j] = std::max(b, wave);
      const double h = s.w[j] - b;
      // The crest moves toward the beach, i.e. toward negative x.
      s.qx[j] = h > 0.0 ? -h * celerity * wave / (wave + h0) : 0.0;
      s.qy[j] = 0.0;
    }
  };
  c.boundary["bottom"] = BoundaryCondition::make_wall();
  c.boundary["top"] = BoundaryCondition::make_wall();
  c.boundary["left"] = BoundaryCondition::make_outflow();
  c.boundary["right"] = BoundaryCondition::make_inflow(
      std::function<ForcingPoint(double)>([](double) { return ForcingPoint{0.0, 0.0, 0.0}; }));
  if (kind == SolitaryWaveKind::breaking)
    c.snapshot_times = {0.0, 1.6, 4.79, 11.18, 17.59};
  else
    c.snapshot_times = {8.0, 11.17, 14.37, 17.56, 20.75};
  return c;
}

ScenarioConfig periodic_wave_scenario(const std::string& series_csv) {
  const double h0 = 0.4;
  const double H = 0.115;
  const double period = 2.2;

  ScenarioConfig c;
  c.name = "periodic_wave";
  c.x0 = 0.0; c.x1 = 8.0; c.y0 = 0.0; c.y1 = 0.6;
  c.default_nx = 200; c.default_ny = 15;
  c.n_manning = 0.01;
  c.t_end = 20.0;
  // 1:35 slope starting right at the wavemaker boundary, so the first gauge sits at
  // the offshore depth 0.4 m.
  c.bathymetry = [h0](double x, double) { return -h0 + x / 35.0; };
  c.initial_state = [](const Mesh& mesh, const BathymetryField& bathy, CellStateField& s) {
    for (int j = 0; j < mesh.n_cells(); ++j) {
      s.w[j] = std::max(0.0, bathy.cell_value(j));
      s.qx[j] = 0.0;
      s.qy[j] = 0.0;
    }
  };
  if (!series_csv.empty()) {
    c.boundary["left"] = BoundaryCondition::make_inflow(ForcingSeries::from_csv(series_csv));
  } else {
    // Synthetic stand-in for the measured wavemaker signal: a linear sine wave with
    // the experiment's height and period, velocity from shallow-water theory.
    const double cx = std::sqrt(kGravity / h0);
    c.boundary["left"] =
        BoundaryCondition::make_inflow(std::function<ForcingPoint(double)>([=](double t) {
          const double w = 0.5 * H * std::sin(2.0 * std::numbers::pi * t / period);
          return ForcingPoint{w, cx * w, 0.0};
        }));
  }
  c.boundary["right"] = BoundaryCondition::make_outflow();
  c.boundary["bottom"] = BoundaryCondition::make_wall();
  c.boundary["top"] = BoundaryCondition::make_wall();
  c.gauges = {{"L1", 0.0, 0.3}, {"L2", 1.2, 0.3}, {"L3", 2.4, 0.3}, {"L4", 3.6, 0.3}};
  c.snapshot_times = {c.t_end};
  return c;
}

ScenarioConfig conical_island_scenario(double ratio) {
  const double h0 = 0.32;
  const double H = ratio * h0;
  const double celerity = std::sqrt(kGravity * (h0 + H));

  ScenarioConfig c;
  c.name = "conical_island";
  c.x0 = 0.0; c.x1 = 25.0; c.y0 = 0.0; c.y1 = 30.0;
  c.default_nx = 60; c.default_ny = 72;
  c.n_manning = 0.016;
  c.t_end = 20.0;
  // Truncated cone: base radius 3.6 m, top radius 1.1 m, height 0.625 m, side slope
  // 1:4, on an otherwise flat basin floor.
  c.bathymetry = [](double x, double y) {
    const double r = std::hypot(x - 12.98, y - 13.80);
    return r < 3.6 ? std::min(0.625, (3.6 - r) / 4.0) : 0.0;
  };
  c.initial_state = [h0](const Mesh& mesh, const BathymetryField& bathy, CellStateField& s) {
    for (int j = 0; j < mesh.n_cells(); ++j) {
      s.w[j] = std::max(h0, bathy.cell_value(j));
      s.qx[j] = 0.0;
      s.qy[j] = 0.0;
    }
  };
  c.boundary["left"] =
      BoundaryCondition::make_inflow(std::function<ForcingPoint(double)>([=](double t) {
        const double wave = solitary_profile(celerity * t, H, h0);
        return ForcingPoint{h0 + wave, celerity * wave / (wave + h0), 0.0};
      }));
  c.boundary["right"] = BoundaryCondition::make_outflow();
  c.boundary["bottom"] = BoundaryCondition::make_wall();
  c.boundary["top"] = BoundaryCondition::make_wall();
  c.gauges = {{"S1", 9.36, 13.80}, {"S2", 10.36, 13.80}, {"S3", 12.96, 11.22},
              {"S4", 15.56, 13.80}};
  c.snapshot_times = {c.t_end};
  return c;
}

ScenarioConfig complex_beach_scenario() {
  const double hs = 1.02;
  const double ls = 8.0;
  const double alpha = 0.2;
  const double H = alpha * hs;
  const double celerity = std::sqrt(kGravity * (hs + H));

  ScenarioConfig c;
  c.name = "complex_beach";
  c.x0 = 0.0; c.x1 = 30.0; c.y0 = -8.0; c.y1 = 8.0;
  c.default_nx = 90; c.default_ny = 48;
  c.n_manning = 0.01;
  c.t_end = 23.0;
  c.bathymetry = [hs, ls](double x, double y) {
    if (x < ls) return -hs;
    return -hs + 0.4 * (x - ls) / (3.0 + std::cos(std::numbers::pi * y / ls));
  };
  c.initial_state = [](const Mesh& mesh, const BathymetryField& bathy, CellStateField& s) {
    for (int j = 0; j < mesh.n_cells(); ++j) {
      s.w[j] = std::max(0.0, bathy.cell_value(j));
      s.qx[j] = 0.0;
      s.qy[j] = 0.0;
    }
  };
  c.boundary["left"] =
      BoundaryCondition::make_inflow(std::function<ForcingPoint(double)>([=](double t) {
        const double wave =
            alpha * hs * sech2(std::sqrt(3.0 * kGravity / (4.0 * hs) * alpha * (alpha + 1.0)) * t);
        return ForcingPoint{wave, celerity * wave / (wave + hs), 0.0};
      }));
  c.boundary["right"] = BoundaryCondition::make_outflow();
  c.boundary["bottom"] = BoundaryCondition::make_wall();
  c.boundary["top"] = BoundaryCondition::make_wall();
  c.snapshot_times = {0.0, 2.0, 4.0, 6.0, 8.0, 10.0, 11.0, 14.0};
  return c;
}

ErrorNorms error_norms(const std::vector<double>& field,
                       const std::function<double(double, double)>& exact, const Mesh& mesh) {
  ErrorNorms n;
  for (int c = 0; c < mesh.n_cells(); ++c) {
    const CellGeometry& g = mesh.geometry(c);
    const double e = field[c] - exact(g.cx, g.cy);
    n.l1 += std::abs(e) * g.area;
    n.l2 += e * e * g.area;
    n.linf = std::max(n.linf, std::abs(e));
  }
  n.l2 = std::sqrt(n.l2);
  return n;
}

}  // namespace swe
