#include "swe2d/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "swe2d/observers.hpp"

namespace swe {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("config: " + msg); }

double to_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(value, &used);
  } catch (const std::exception&) {
    fail("key '" + key + "': cannot parse '" + value + "' as a number");
  }
  if (used != value.size()) fail("key '" + key + "': trailing characters in '" + value + "'");
  if (!std::isfinite(x)) fail("key '" + key + "': value must be finite");
  return x;
}

long to_long(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long x = 0;
  try {
    x = std::stol(value, &used);
  } catch (const std::exception&) {
    fail("key '" + key + "': cannot parse '" + value + "' as an integer");
  }
  if (used != value.size()) fail("key '" + key + "': trailing characters in '" + value + "'");
  return x;
}

int to_int(const std::string& key, const std::string& value) {
  return static_cast<int>(to_long(key, value));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<double> to_double_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  for (const std::string& part : split(value, ','))
    if (!part.empty()) out.push_back(to_double(key, part));
  return out;
}

std::vector<Gauge> to_gauges(const std::string& key, const std::string& value) {
  std::vector<Gauge> out;
  for (const std::string& part : split(value, ',')) {
    if (part.empty()) continue;
    std::vector<std::string> f = split(part, ':');
    if (f.size() != 3 || f[0].empty())
      fail("key '" + key + "': expected label:x:y entries, got '" + part + "'");
    out.push_back({f[0], to_double(key, f[1]), to_double(key, f[2])});
  }
  return out;
}

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "scenario") cfg.scenario = value;
  else if (key == "regime") cfg.regime = value;
  else if (key == "axis") cfg.axis = value;
  else if (key == "kind") cfg.kind = value;
  else if (key == "ratio") cfg.ratio = to_double(key, value);
  else if (key == "nx") cfg.nx = to_int(key, value);
  else if (key == "ny") cfg.ny = to_int(key, value);
  else if (key == "mesh_file") cfg.mesh_file = value;
  else if (key == "cfl") cfg.cfl = to_double(key, value);
  else if (key == "t_end") cfg.t_end = to_double(key, value);
  else if (key == "n_manning") cfg.n_manning = to_double(key, value);
  else if (key == "dt_max") cfg.dt_max = to_double(key, value);
  else if (key == "max_steps") cfg.max_steps = to_long(key, value);
  else if (key == "gauge_dt") cfg.gauge_dt = to_double(key, value);
  else if (key == "gauges") cfg.gauges = to_gauges(key, value);
  else if (key == "snapshot_times") cfg.snapshot_times = to_double_list(key, value);
  else if (key == "snapshot_format") cfg.snapshot_format = value;
  else if (key == "out_dir") cfg.out_dir = value;
  else if (key == "forcing_series") cfg.forcing_series = value;
  else fail("unknown key '" + key + "'");
}

void validate(const RunConfig& cfg) {
  if (cfg.scenario.empty()) fail("missing required key 'scenario' (see list-scenarios)");
  const std::vector<std::string>& names = scenario_names();
  bool known = false;
  for (const std::string& n : names) known = known || n == cfg.scenario;
  if (!known) fail("unknown scenario '" + cfg.scenario + "'");
  if (cfg.regime != "supercritical" && cfg.regime != "subcritical")
    fail("key 'regime': expected supercritical or subcritical, got '" + cfg.regime + "'");
  if (cfg.axis != "x" && cfg.axis != "y")
    fail("key 'axis': expected x or y, got '" + cfg.axis + "'");
  if (cfg.kind != "breaking" && cfg.kind != "nonbreaking")
    fail("key 'kind': expected breaking or nonbreaking, got '" + cfg.kind + "'");
  if (!(cfg.ratio > 0.0)) fail("key 'ratio': must be positive");
  if (cfg.nx < 0 || cfg.ny < 0) fail("keys 'nx'/'ny': resolution must be positive");
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) fail("key 'cfl': must lie in (0, 1]");
  if (!(cfg.dt_max > 0.0)) fail("key 'dt_max': must be positive");
  if (cfg.max_steps <= 0) fail("key 'max_steps': must be positive");
  if (cfg.snapshot_format != "csv" && cfg.snapshot_format != "vtk")
    fail("key 'snapshot_format': expected csv or vtk, got '" + cfg.snapshot_format + "'");
}

std::string default_out_dir(const RunConfig& cfg) {
  const char* root = std::getenv("SWE2D_OUT_ROOT");
  std::string base = (root != nullptr && *root != '\0') ? root : "out";
  return base + "/" + cfg.scenario;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {"steady_slope",  "dam_break",
                                                 "solitary_runup", "periodic_wave",
                                                 "conical_island", "complex_beach"};
  return names;
}

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig cfg;
  if (args.empty()) fail("empty configuration; required key: scenario=<name>");
  for (const std::string& raw : args) {
    std::string token = raw;
    if (token.rfind("--", 0) == 0) token = token.substr(2);
    if (token.empty()) continue;
    std::size_t eq = token.find('=');
    if (eq == std::string::npos || eq == 0)
      fail("expected key=value, got '" + raw + "'");
    apply_key(cfg, token.substr(0, eq), token.substr(eq + 1));
  }
  validate(cfg);
  return cfg;
}

RunConfig load_config_file(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file '" + path + "'");
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) tokens.push_back(token);
  }
  tokens.insert(tokens.end(), overrides.begin(), overrides.end());
  if (tokens.empty()) fail("config file '" + path + "' is empty; required key: scenario=<name>");
  return parse_config(tokens);
}

ScenarioInstance build_scenario(const RunConfig& cfg) {
  if (cfg.scenario == "steady_slope") {
    FlowRegime regime =
        cfg.regime == "supercritical" ? FlowRegime::supercritical : FlowRegime::subcritical;
    FlowAxis axis = cfg.axis == "x" ? FlowAxis::x : FlowAxis::y;
    SteadySlopeSetup setup = steady_slope_scenario(regime, axis);
    return {std::move(setup.config), std::move(setup.exact)};
  }
  if (cfg.scenario == "dam_break") return {dam_break_scenario(), std::nullopt};
  if (cfg.scenario == "solitary_runup") {
    SolitaryWaveKind kind = cfg.kind == "breaking" ? SolitaryWaveKind::breaking
                                                   : SolitaryWaveKind::nonbreaking;
    return {solitary_runup_scenario(kind), std::nullopt};
  }
  if (cfg.scenario == "periodic_wave") return {periodic_wave_scenario(cfg.forcing_series), std::nullopt};
  if (cfg.scenario == "conical_island") return {conical_island_scenario(cfg.ratio), std::nullopt};
  if (cfg.scenario == "complex_beach") return {complex_beach_scenario(), std::nullopt};
  fail("unknown scenario '" + cfg.scenario + "'");
}

RunReport execute(const RunConfig& cfg) {
  ScenarioInstance inst = build_scenario(cfg);
  const ScenarioConfig& sc = inst.config;

  Mesh mesh = cfg.mesh_file.empty()
                  ? generate_rect_mesh(sc.x0, sc.x1, sc.y0, sc.y1,
                                       cfg.nx > 0 ? cfg.nx : sc.default_nx,
                                       cfg.ny > 0 ? cfg.ny : sc.default_ny, sc.pattern)
                  : load_mesh(cfg.mesh_file);
  BathymetryField bathy = cfg.mesh_file.empty()
                              ? BathymetryField::sample(mesh, sc.bathymetry)
                              : BathymetryField::from_vertex_values(mesh, mesh.vertex_b());

  SchemeParams params;
  params.g = sc.g;
  params.n_manning = cfg.n_manning >= 0.0 ? cfg.n_manning : sc.n_manning;
  params.cfl = cfg.cfl;
  params.dt_max = cfg.dt_max;
  params.max_steps = cfg.max_steps;

  Simulation sim(mesh, bathy, params, sc.boundary);
  CellStateField init = CellStateField::zeros(mesh.n_cells());
  sc.initial_state(mesh, bathy, init);
  sim.set_state(std::move(init));

  std::string out_dir = cfg.out_dir.empty() ? default_out_dir(cfg) : cfg.out_dir;
  ensure_directory(out_dir);

  std::vector<GaugeObserver> gauge_obs;
  const std::vector<Gauge>& gauges = cfg.gauges.empty() ? sc.gauges : cfg.gauges;
  gauge_obs.reserve(gauges.size());
  for (const Gauge& gauge : gauges)
    gauge_obs.emplace_back(mesh, bathy, sim.eps(), gauge.label, gauge.x, gauge.y, cfg.gauge_dt);

  const std::vector<double>& snap_times =
      cfg.snapshot_times.empty() ? sc.snapshot_times : cfg.snapshot_times;
  SnapshotObserver snap_obs(mesh, bathy, snap_times, out_dir, sc.name,
                            cfg.snapshot_format == "vtk" ? SnapshotObserver::Format::vtk
                                                         : SnapshotObserver::Format::csv);

  std::vector<Observer*> observers;
  for (GaugeObserver& o : gauge_obs) observers.push_back(&o);
  if (!snap_times.empty()) observers.push_back(&snap_obs);

  double t_end = cfg.t_end >= 0.0 ? cfg.t_end : sc.t_end;
  RunReport report;
  report.scenario = sc.name;
  report.cells = mesh.n_cells();
  report.stats = sim.run(t_end, observers);
  double scale = std::max(std::abs(report.stats.mass_initial), 1e-300);
  report.mass_drift_rel = (report.stats.mass_final - report.stats.mass_initial) / scale;

  for (GaugeObserver& o : gauge_obs) {
    std::string path = out_dir + "/gauge_" + o.label() + ".csv";
    o.write_csv(path);
    report.gauge_files.push_back(path);
  }
  report.snapshot_files = snap_obs.files();

  if (inst.exact) {
    const CellStateField& s = sim.state().states;
    std::vector<double> h(mesh.n_cells());
    for (int c = 0; c < mesh.n_cells(); ++c) h[c] = s.w[c] - bathy.cell_value(c);
    report.norms.push_back({"h", error_norms(h, inst.exact->h, mesh)});
    report.norms.push_back({"qx", error_norms(s.qx, inst.exact->qx, mesh)});
    report.norms.push_back({"qy", error_norms(s.qy, inst.exact->qy, mesh)});
  }

  report.monitors_ok = report.stats.min_depth >= 0.0 && std::isfinite(report.stats.mass_final) &&
                       std::isfinite(report.stats.max_speed);
  return report;
}

std::string format_report(const RunReport& report) {
  std::ostringstream out;
  out.setf(std::ios::scientific);
  out.precision(6);
  out << "scenario:        " << report.scenario << "\n"
      << "cells:           " << report.cells << "\n"
      << "steps:           " << report.stats.steps << "\n"
      << "simulated time:  " << report.stats.t_end << " s\n"
      << "wall time:       " << report.stats.wall_seconds << " s\n"
      << "volume drift:    " << report.mass_drift_rel << " (relative)\n"
      << "min mean depth:  " << report.stats.min_depth << "\n"
      << "max speed:       " << report.stats.max_speed << "\n";
  if (!report.norms.empty()) {
    out << "errors against the reference solution:\n";
    out << "  variable             L1              L2            Linf\n";
    for (const NormRow& row : report.norms) {
      out << "  " << row.variable;
      for (std::size_t i = row.variable.size(); i < 10; ++i) out << ' ';
      out << row.norms.l1 << "    " << row.norms.l2 << "    " << row.norms.linf << "\n";
    }
  }
  for (const std::string& f : report.gauge_files) out << "gauge file:      " << f << "\n";
  for (const std::string& f : report.snapshot_files) out << "snapshot file:   " << f << "\n";
  out << "monitors:        " << (report.monitors_ok ? "ok" : "FAILED") << "\n";
  return out.str();
}

}  // namespace swe
