#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "swe2d/config.hpp"

using namespace swe;

namespace {

std::string thrown_message(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

bool file_exists(const std::string& path) { return std::ifstream(path).good(); }

}  // namespace

TEST_CASE("run configuration parsing") {
  RunConfig cfg = parse_config(
      {"scenario=steady_slope", "regime=subcritical", "axis=y", "kind=nonbreaking", "ratio=0.1",
       "nx=40", "ny=6", "cfl=0.5", "t_end=2.5", "n_manning=0.02", "dt_max=0.125", "max_steps=999",
       "gauge_dt=0.1", "gauges=a:1:2,b:3:4", "snapshot_times=1,2,3.5", "snapshot_format=vtk",
       "out_dir=somewhere", "forcing_series=f.csv", "mesh_file=m.txt"});
  CHECK(cfg.scenario == "steady_slope");
  CHECK(cfg.regime == "subcritical");
  CHECK(cfg.axis == "y");
  CHECK(cfg.kind == "nonbreaking");
  CHECK(cfg.ratio == 0.1);
  CHECK(cfg.nx == 40);
  CHECK(cfg.ny == 6);
  CHECK(cfg.cfl == 0.5);
  CHECK(cfg.t_end == 2.5);
  CHECK(cfg.n_manning == 0.02);
  CHECK(cfg.dt_max == 0.125);
  CHECK(cfg.max_steps == 999);
  CHECK(cfg.gauge_dt == 0.1);
  REQUIRE(cfg.gauges.size() == 2);
  CHECK(cfg.gauges[0].label == "a");
  CHECK(cfg.gauges[0].x == 1.0);
  CHECK(cfg.gauges[0].y == 2.0);
  CHECK(cfg.gauges[1].label == "b");
  CHECK(cfg.gauges[1].x == 3.0);
  CHECK(cfg.gauges[1].y == 4.0);
  REQUIRE(cfg.snapshot_times.size() == 3);
  CHECK(cfg.snapshot_times[2] == 3.5);
  CHECK(cfg.snapshot_format == "vtk");
  CHECK(cfg.out_dir == "somewhere");
  CHECK(cfg.forcing_series == "f.csv");
  CHECK(cfg.mesh_file == "m.txt");

  // leading "--" on tokens is accepted, so argv can be passed straight through
  RunConfig dashed = parse_config({"--scenario=dam_break", "--nx=10"});
  CHECK(dashed.scenario == "dam_break");
  CHECK(dashed.nx == 10);

  // a later token overrides an earlier one
  RunConfig twice = parse_config({"scenario=dam_break", "nx=10", "nx=20"});
  CHECK(twice.nx == 20);
}

TEST_CASE("configuration errors name the offending key") {
  CHECK(thrown_message([] { parse_config({}); }).find("scenario") != std::string::npos);
  CHECK(thrown_message([] {
          parse_config({"scenario=dam_break", "bogus_key=1"});
        }).find("bogus_key") != std::string::npos);
  CHECK(thrown_message([] {
          parse_config({"scenario=no_such_thing"});
        }).find("no_such_thing") != std::string::npos);
  CHECK(thrown_message([] {
          parse_config({"scenario=dam_break", "nx=abc"});
        }).find("nx") != std::string::npos);
  CHECK(thrown_message([] { parse_config({"scenario=dam_break", "just_a_word"}); })
            .find("key=value") != std::string::npos);
  CHECK(thrown_message([] {
          parse_config({"scenario=dam_break", "cfl=1.5"});
        }).find("cfl") != std::string::npos);
  CHECK(thrown_message([] {
          parse_config({"scenario=dam_break", "cfl=0"});
        }).find("cfl") != std::string::npos);
  CHECK(thrown_message([] {
          parse_config({"scenario=dam_break", "dt_max=-1"});
        }).find("dt_max") != std::string::npos);
  CHECK(thrown_message([] {
          parse_config({"scenario=dam_break", "max_steps=0"});
        }).find("max_steps") != std::string::npos);
  CHECK(thrown_message([] {
          parse_config({"scenario=dam_break", "nx=-4"});
        }).find("nx") != std::string::npos);
  CHECK(thrown_message([] {
          parse_config({"scenario=steady_slope", "regime=laminar"});
        }).find("regime") != std::string::npos);
  CHECK(thrown_message([] {
          parse_config({"scenario=steady_slope", "axis=z"});
        }).find("axis") != std::string::npos);
  CHECK(thrown_message([] {
          parse_config({"scenario=solitary_runup", "kind=medium"});
        }).find("kind") != std::string::npos);
  CHECK(thrown_message([] {
          parse_config({"scenario=conical_island", "ratio=0"});
        }).find("ratio") != std::string::npos);
  CHECK(thrown_message([] {
          parse_config({"scenario=dam_break", "snapshot_format=png"});
        }).find("snapshot_format") != std::string::npos);
  CHECK(thrown_message([] {
          parse_config({"scenario=dam_break", "gauges=a:1"});
        }).find("label:x:y") != std::string::npos);

  // cfl = 1 is the upper edge of the allowed range
  CHECK_NOTHROW(parse_config({"scenario=dam_break", "cfl=1"}));
}

TEST_CASE("config files with comments and overrides") {
  const std::string path = "config_test.cfg";
  {
    std::ofstream out(path);
    out << "# full dam-break run\n"
        << "scenario=dam_break\n"
        << "nx=20 ny=5   # coarse mesh\n"
        << "t_end=0.5\n";
  }
  RunConfig cfg = load_config_file(path);
  CHECK(cfg.scenario == "dam_break");
  CHECK(cfg.nx == 20);
  CHECK(cfg.ny == 5);
  CHECK(cfg.t_end == 0.5);

  RunConfig over = load_config_file(path, {"t_end=0.25", "cfl=0.5"});
  CHECK(over.t_end == 0.25);
  CHECK(over.cfl == 0.5);
  CHECK(over.nx == 20);
  std::remove(path.c_str());

  CHECK(thrown_message([] { load_config_file("no_such_file.cfg"); }).find("no_such_file") !=
        std::string::npos);

  {
    std::ofstream out(path);
    out << "# nothing but comments\n\n";
  }
  CHECK(thrown_message([&] { load_config_file(path); }).find("empty") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("scenario catalogue") {
  const std::vector<std::string>& names = scenario_names();
  CHECK(names.size() == 6);
  for (const std::string& name : names) {
    RunConfig cfg = parse_config({"scenario=" + name});
    ScenarioInstance inst = build_scenario(cfg);
    CHECK(inst.config.name == name);
    CHECK(inst.config.default_nx > 0);
    CHECK(inst.config.default_ny > 0);
    // only the balanced channel has a closed-form reference solution
    CHECK(inst.exact.has_value() == (name == "steady_slope"));
  }

  // selectors reach the scenario factories
  ScenarioInstance sub =
      build_scenario(parse_config({"scenario=steady_slope", "regime=subcritical"}));
  CHECK(sub.exact->h(0.0, 0.0) == doctest::Approx(0.146742).epsilon(1e-4));
  ScenarioInstance rot = build_scenario(parse_config({"scenario=steady_slope", "axis=y"}));
  CHECK(rot.config.default_ny == 112);
}

TEST_CASE("end-to-end run writes a report and the output files") {
  // the scenario's default mesh is fine enough that the depth stays above the
  // velocity-desingularization threshold, keeping the balanced state a fixed point
  const std::string out_dir = "config_exec_out";
  RunConfig cfg = parse_config({"scenario=steady_slope", "t_end=0.2",
                                "gauges=P1:1.25:0.1", "snapshot_times=0.1",
                                "out_dir=" + out_dir});
  RunReport report = execute(cfg);

  CHECK(report.scenario == "steady_slope");
  CHECK(report.cells == 2 * 112 * 9);
  CHECK(report.stats.steps > 0);
  CHECK(report.stats.t_end == 0.2);
  CHECK(report.monitors_ok);
  CHECK(std::abs(report.mass_drift_rel) < 1e-11);

  // the balanced initial state is a discrete fixed point, so the errors stay tiny
  REQUIRE(report.norms.size() == 3);
  CHECK(report.norms[0].variable == "h");
  for (const NormRow& row : report.norms) CHECK(row.norms.linf < 1e-9);

  REQUIRE(report.gauge_files.size() == 1);
  CHECK(report.gauge_files[0] == out_dir + "/gauge_P1.csv");
  CHECK(file_exists(report.gauge_files[0]));
  REQUIRE(report.snapshot_files.size() == 1);
  CHECK(file_exists(report.snapshot_files[0]));

  const std::string text = format_report(report);
  CHECK(text.find("steady_slope") != std::string::npos);
  CHECK(text.find("monitors:") != std::string::npos);
  CHECK(text.find("ok") != std::string::npos);

  // identical configs give identical results, down to the last bit
  RunReport again = execute(cfg);
  CHECK(again.stats.steps == report.stats.steps);
  CHECK(again.stats.mass_final == report.stats.mass_final);
  CHECK(again.norms[2].norms.linf == report.norms[2].norms.linf);

  // the vtk snapshot format reaches the writer
  cfg.snapshot_format = "vtk";
  RunReport vtk = execute(cfg);
  REQUIRE(vtk.snapshot_files.size() == 1);
  CHECK(vtk.snapshot_files[0].substr(vtk.snapshot_files[0].size() - 4) == ".vtk");
  CHECK(file_exists(vtk.snapshot_files[0]));

  std::filesystem::remove_all(out_dir);
}

TEST_CASE("default output directory honors SWE2D_OUT_ROOT") {
  const std::string root = "config_root_out";
  setenv("SWE2D_OUT_ROOT", root.c_str(), 1);
  RunConfig cfg = parse_config({"scenario=steady_slope", "nx=28", "ny=3", "t_end=0.05",
                                "gauges=P1:1.25:0.1"});
  RunReport report = execute(cfg);
  unsetenv("SWE2D_OUT_ROOT");

  REQUIRE(report.gauge_files.size() == 1);
  CHECK(report.gauge_files[0] == root + "/steady_slope/gauge_P1.csv");
  CHECK(file_exists(report.gauge_files[0]));
  std::filesystem::remove_all(root);
}

TEST_CASE("a run can load its mesh from a file") {
  // rebuild the generated mesh with the channel bed stored at the vertices; the
  // rectangle sides pick up their left/right/bottom/top labels automatically
  SteadySlopeSetup setup = steady_slope_scenario(FlowRegime::supercritical);
  const ScenarioConfig& sc = setup.config;
  Mesh gen = generate_rect_mesh(sc.x0, sc.x1, sc.y0, sc.y1, sc.default_nx, sc.default_ny,
                                sc.pattern);
  std::vector<Vertex> vertices;
  std::vector<double> vb;
  for (int v = 0; v < gen.n_vertices(); ++v) {
    vertices.push_back(gen.vertex(v));
    vb.push_back(sc.bathymetry(gen.vertex(v).x, gen.vertex(v).y));
  }
  std::vector<std::array<int, 3>> cells;
  for (int c = 0; c < gen.n_cells(); ++c) cells.push_back(gen.cell(c));
  const std::string mesh_path = "config_mesh.txt";
  save_mesh(Mesh(vertices, cells, vb), mesh_path);

  const std::string out_dir = "config_meshfile_out";
  RunConfig cfg = parse_config({"scenario=steady_slope", "mesh_file=" + mesh_path,
                                "t_end=0.05", "out_dir=" + out_dir});
  RunReport report = execute(cfg);
  CHECK(report.cells == 2 * sc.default_nx * sc.default_ny);
  CHECK(report.monitors_ok);
  for (const NormRow& row : report.norms) CHECK(row.norms.linf < 1e-9);

  std::remove(mesh_path.c_str());
  std::filesystem::remove_all(out_dir);
}
