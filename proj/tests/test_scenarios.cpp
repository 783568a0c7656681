#include <cmath>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "swe2d/bathymetry.hpp"
#include "swe2d/scenarios.hpp"

using namespace swe;

namespace {
constexpr double kG = 9.81;
}

TEST_CASE("balanced channel flow setups") {
  const SteadySlopeSetup super = steady_slope_scenario(FlowRegime::supercritical);
  CHECK(super.q0 == 0.02);
  CHECK(super.h0 == doctest::Approx(0.021270).epsilon(1e-4));
  CHECK(super.froude == doctest::Approx(2.058).epsilon(5e-4));

  const SteadySlopeSetup sub = steady_slope_scenario(FlowRegime::subcritical);
  CHECK(sub.q0 == 0.1);
  CHECK(sub.h0 == doctest::Approx(0.146742).epsilon(1e-4));
  CHECK(sub.froude == doctest::Approx(0.568).epsilon(1e-3));

  // the depth satisfies the momentum balance g h0 S = g n^2 q0^2 / h0^(7/3)
  for (const SteadySlopeSetup* s : {&super, &sub}) {
    const double n = s->config.n_manning;
    const double lhs = kG * s->h0 * 0.015;
    const double rhs = kG * n * n * s->q0 * s->q0 / std::pow(s->h0, 7.0 / 3.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }

  // the y-axis variant transposes the domain and the discharge
  const SteadySlopeSetup rot = steady_slope_scenario(FlowRegime::supercritical, FlowAxis::y);
  CHECK(rot.config.x1 == doctest::Approx(super.config.y1));
  CHECK(rot.config.y1 == doctest::Approx(super.config.x1));
  CHECK(rot.exact.qy(0.1, 1.0) == doctest::Approx(super.q0));
  CHECK(rot.exact.qx(0.1, 1.0) == 0.0);
  CHECK(super.exact.qx(1.0, 0.1) == doctest::Approx(super.q0));
  CHECK(super.exact.h(1.0, 0.1) == doctest::Approx(super.h0));
}

TEST_CASE("dam break scenario") {
  ScenarioConfig sc = dam_break_scenario();
  CHECK(sc.bathymetry(3.4, 0.5) == doctest::Approx(0.0));
  CHECK(sc.bathymetry(7.0, 0.5) == doctest::Approx(0.36).epsilon(1e-13));
  CHECK(sc.bathymetry(1.0, 0.5) == 0.0);
  CHECK(sc.n_manning == 0.01);

  // with the dam face on a cell boundary the reservoir volume is exact:
  // 0.25 m depth x 2.25 m x 1 m = 0.5625 m^3
  Mesh mesh = generate_rect_mesh(sc.x0, sc.x1, sc.y0, sc.y1, 140, 5, sc.pattern);
  BathymetryField bathy = BathymetryField::sample(mesh, sc.bathymetry);
  CellStateField s = CellStateField::zeros(mesh.n_cells());
  sc.initial_state(mesh, bathy, s);
  double volume = 0.0, min_h = 1e30;
  for (int c = 0; c < mesh.n_cells(); ++c) {
    const double h = s.w[c] - bathy.cell_value(c);
    volume += h * mesh.geometry(c).area;
    min_h = std::min(min_h, h);
  }
  CHECK(volume == doctest::Approx(0.5625).epsilon(1e-12));
  CHECK(min_h == 0.0);  // dry downstream of the dam

  // gauges sit on the centerline inside the flume
  REQUIRE(sc.gauges.size() == 4);
  for (const Gauge& g : sc.gauges) {
    CHECK(g.x > sc.x0);
    CHECK(g.x < sc.x1);
    CHECK(g.y == 0.5);
  }
}

TEST_CASE("solitary wave run-up scenario") {
  ScenarioConfig sc = solitary_runup_scenario(SolitaryWaveKind::breaking);
  // beach rises through the still-water line at x = 0; offshore is 1 m deep
  CHECK(sc.bathymetry(0.0, 0.5) == doctest::Approx(0.0));
  CHECK(sc.bathymetry(30.0, 0.5) == doctest::Approx(-1.0));
  CHECK(sc.bathymetry(-19.85, 0.5) == doctest::Approx(1.0).epsilon(1e-13));

  Mesh mesh = generate_rect_mesh(sc.x0, sc.x1, sc.y0, sc.y1, 400, 3, sc.pattern);
  BathymetryField bathy = BathymetryField::sample(mesh, sc.bathymetry);
  CellStateField s = CellStateField::zeros(mesh.n_cells());
  sc.initial_state(mesh, bathy, s);

  // crest: surface +0.3 m at x0 = 14, moving toward the beach at
  // u = -c w / (w + h0) with c = sqrt(g (h0 + H))
  const double c_wave = std::sqrt(kG * 1.3);
  CHECK(c_wave == doctest::Approx(3.5707).epsilon(1e-4));
  // search the crest among wet cells only; dry beach cells carry w = B, which
  // rises well above the wave near the back of the domain
  double wmax = -1e30, x_at = 0.0, umin = 0.0;
  for (int c = 0; c < mesh.n_cells(); ++c) {
    const double h = s.w[c] - bathy.cell_value(c);
    if (h > 1e-9 && s.w[c] > wmax) {
      wmax = s.w[c];
      x_at = mesh.geometry(c).cx;
      umin = s.qx[c] / h;
    }
    CHECK(s.qy[c] == 0.0);
  }
  CHECK(wmax == doctest::Approx(0.3).epsilon(5e-3));
  CHECK(std::abs(x_at - 14.0) < 0.2);
  CHECK(umin == doctest::Approx(-c_wave * 0.3 / 1.3).epsilon(5e-3));  // -0.8240

  // the non-breaking variant is smaller and starts further offshore
  ScenarioConfig nb = solitary_runup_scenario(SolitaryWaveKind::nonbreaking);
  CellStateField s2 = CellStateField::zeros(mesh.n_cells());
  nb.initial_state(mesh, bathy, s2);
  double wmax2 = -1e30, x2 = 0.0;
  for (int c = 0; c < mesh.n_cells(); ++c)
    if (s2.w[c] - bathy.cell_value(c) > 1e-9 && s2.w[c] > wmax2) {
      wmax2 = s2.w[c];
      x2 = mesh.geometry(c).cx;
    }
  CHECK(wmax2 == doctest::Approx(0.0185).epsilon(1e-3));
  CHECK(std::abs(x2 - 38.5) < 0.2);
}

TEST_CASE("conical island scenario") {
  ScenarioConfig sc = conical_island_scenario(0.2);
  // truncated cone: 0.625 m top, 1:4 side, base radius 3.6 m at (12.98, 13.8)
  CHECK(sc.bathymetry(12.98, 13.80) == doctest::Approx(0.625));
  CHECK(sc.bathymetry(12.98 + 3.6, 13.80) == doctest::Approx(0.0));
  CHECK(sc.bathymetry(12.98 + 2.5, 13.80) == doctest::Approx((3.6 - 2.5) / 4.0));
  CHECK(sc.bathymetry(12.98, 13.80 + 1.1) == doctest::Approx(0.625).epsilon(1e-13));
  CHECK(sc.bathymetry(0.0, 0.0) == 0.0);

  // still water at 0.32 m leaves the island crest dry
  Mesh mesh = generate_rect_mesh(sc.x0, sc.x1, sc.y0, sc.y1, 50, 60, sc.pattern);
  BathymetryField bathy = BathymetryField::sample(mesh, sc.bathymetry);
  CellStateField s = CellStateField::zeros(mesh.n_cells());
  sc.initial_state(mesh, bathy, s);
  int dry = 0;
  for (int c = 0; c < mesh.n_cells(); ++c) {
    const double h = s.w[c] - bathy.cell_value(c);
    CHECK(h >= 0.0);
    if (bathy.cell_value(c) >= 0.32) {
      CHECK(h == 0.0);
      ++dry;
    }
    CHECK(s.qx[c] == 0.0);
  }
  CHECK(dry > 0);

  // the boundary forcing is the wave profile: peak ratio*h0 at t = 0
  const auto& left = sc.boundary.at("left");
  REQUIRE(left.kind == BoundaryCondition::Kind::inflow_analytic);
  CHECK(left.analytic(0.0).w == doctest::Approx(0.32 + 0.2 * 0.32).epsilon(1e-12));
  CHECK(left.analytic(30.0).w == doctest::Approx(0.32).epsilon(1e-6));  // long after

  // gauges inside the basin
  for (const Gauge& g : sc.gauges) {
    CHECK(g.x > sc.x0);
    CHECK(g.x < sc.x1);
    CHECK(g.y > sc.y0);
    CHECK(g.y < sc.y1);
  }
}

TEST_CASE("curved-bay beach scenario") {
  ScenarioConfig sc = complex_beach_scenario();
  CHECK(sc.bathymetry(4.0, -3.0) == doctest::Approx(-1.02));
  CHECK(sc.bathymetry(4.0, 5.0) == doctest::Approx(-1.02));
  CHECK(sc.bathymetry(18.0, 0.0) == doctest::Approx(-0.02).epsilon(1e-10));
  // alongshore variation: the denominator 3 + cos(pi y / 8)
  CHECK(sc.bathymetry(18.0, 8.0) == doctest::Approx(-1.02 + 4.0 / 2.0));

  const auto& left = sc.boundary.at("left");
  REQUIRE(left.kind == BoundaryCondition::Kind::inflow_analytic);
  CHECK(left.analytic(0.0).w == doctest::Approx(0.204).epsilon(1e-12));  // 0.2 * 1.02
  CHECK(std::abs(left.analytic(25.0).w) < 1e-6);
}

TEST_CASE("periodic wave scenario") {
  ScenarioConfig sc = periodic_wave_scenario();
  const auto& left = sc.boundary.at("left");
  REQUIRE(left.kind == BoundaryCondition::Kind::inflow_analytic);
  // synthetic forcing: amplitude H/2 = 0.0575, period 2.2 s, around still water
  double wmax = -1e30;
  for (double t = 0.0; t < 2.2; t += 0.01)
    wmax = std::max(wmax, left.analytic(t).w - left.analytic(0.0).w);
  CHECK(wmax == doctest::Approx(0.0575).epsilon(1e-3));
  for (double t : {0.3, 1.1, 1.7})
    CHECK(left.analytic(t + 2.2).w == doctest::Approx(left.analytic(t).w).epsilon(1e-12));

  // a measured series file overrides the synthetic signal
  const std::string path = "series_test.csv";
  {
    std::ofstream out(path);
    out << "t,w,u,v\n0,0.41,0.1,0\n1,0.43,0.2,0\n2,0.40,0.0,0\n";
  }
  ScenarioConfig forced = periodic_wave_scenario(path);
  const auto& fl = forced.boundary.at("left");
  REQUIRE(fl.kind == BoundaryCondition::Kind::inflow_series);
  CHECK(fl.series.at(0.0).w == 0.41);
  CHECK(fl.series.at(1.0).w == 0.43);
  CHECK(fl.series.at(0.5).w == doctest::Approx(0.42).epsilon(1e-13));  // interpolated
  CHECK(fl.series.at(9.0).w == 0.40);                                  // clamped
  std::remove(path.c_str());

  // malformed series: parse error
  {
    std::ofstream out(path);
    out << "t,w,u,v\n0,0.41,0.1,0\nnot_a_number,1,2,3\n";
  }
  CHECK_THROWS_AS(periodic_wave_scenario(path), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("every scenario starts wet-or-dry valid inside its domain") {
  std::vector<ScenarioConfig> all;
  all.push_back(steady_slope_scenario(FlowRegime::supercritical).config);
  all.push_back(steady_slope_scenario(FlowRegime::subcritical, FlowAxis::y).config);
  all.push_back(dam_break_scenario());
  all.push_back(solitary_runup_scenario(SolitaryWaveKind::breaking));
  all.push_back(solitary_runup_scenario(SolitaryWaveKind::nonbreaking));
  all.push_back(periodic_wave_scenario());
  all.push_back(conical_island_scenario(0.1));
  all.push_back(conical_island_scenario(0.2));
  all.push_back(complex_beach_scenario());
  for (const ScenarioConfig& sc : all) {
    Mesh mesh =
        generate_rect_mesh(sc.x0, sc.x1, sc.y0, sc.y1, sc.default_nx, sc.default_ny, sc.pattern);
    BathymetryField bathy = BathymetryField::sample(mesh, sc.bathymetry);
    CellStateField s = CellStateField::zeros(mesh.n_cells());
    sc.initial_state(mesh, bathy, s);
    for (int c = 0; c < mesh.n_cells(); ++c) {
      const double h = s.w[c] - bathy.cell_value(c);
      CHECK(h >= 0.0);
      CHECK(std::isfinite(s.w[c]));
      CHECK(std::isfinite(s.qx[c]));
      CHECK(std::isfinite(s.qy[c]));
    }
    for (const Gauge& g : sc.gauges) {
      CHECK(g.x >= sc.x0);
      CHECK(g.x <= sc.x1);
      CHECK(g.y >= sc.y0);
      CHECK(g.y <= sc.y1);
    }
    CHECK(sc.t_end > 0.0);
  }
}

TEST_CASE("error norms") {
  Mesh mesh = generate_rect_mesh(0.0, 1.0, 0.0, 1.0, 16, 16, DiagonalPattern::alternating);

  // a field compared against itself gives zero
  std::vector<double> field(mesh.n_cells());
  for (int c = 0; c < mesh.n_cells(); ++c) field[c] = mesh.geometry(c).cx;
  ErrorNorms zero = error_norms(field, [](double x, double) { return x; }, mesh);
  CHECK(zero.l1 == 0.0);
  CHECK(zero.l2 == 0.0);
  CHECK(zero.linf == 0.0);

  // constant error 1 on a unit-area domain: all three norms are 1
  std::vector<double> ones(mesh.n_cells(), 1.0);
  ErrorNorms unit = error_norms(ones, [](double, double) { return 0.0; }, mesh);
  CHECK(unit.l1 == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(unit.l2 == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(unit.linf == 1.0);

  // error = x integrates to 1/2 exactly (centroid quadrature is exact for planes)
  ErrorNorms linear = error_norms(field, [](double, double) { return 0.0; }, mesh);
  CHECK(linear.l1 == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(linear.linf < 1.0);
}
