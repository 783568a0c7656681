#include "swe2d/stepper.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace swe {

double compute_dt(const Mesh& mesh, const std::vector<std::array<LocalSpeeds, 3>>& speeds,
                  double cfl, double dt_max) {
  double dt = dt_max;
  for (int c = 0; c < mesh.n_cells(); ++c) {
    double a = 0.0;
    for (int k = 0; k < 3; ++k)
      a = std::max({a, speeds[c][k].in, speeds[c][k].out});
    if (a > 0.0) dt = std::min(dt, cfl * mesh.geometry(c).inradius / a);
  }
  return dt;
}

Simulation::Simulation(const Mesh& mesh, const BathymetryField& bathy, SchemeParams params,
                       const BoundaryMap& bcs)
    : mesh_(mesh), bathy_(bathy), params_(params) {
  eps_ = mesh.max_cell_area() * mesh.max_cell_area();
  bc_by_tag_.reserve(mesh.boundary_tags().size());
  for (const std::string& tag : mesh.boundary_tags()) {
    const auto it = bcs.find(tag);
    if (it == bcs.end())
      throw std::runtime_error("simulation: no boundary condition for tag '" + tag + "'");
    bc_by_tag_.push_back(it->second);
  }
  state_.states = CellStateField::zeros(mesh.n_cells());
  for (int c = 0; c < mesh.n_cells(); ++c) state_.states.w[c] = bathy.cell_value(c);
  state_.diag = diagnostics(state_.states);
}

void Simulation::set_state(CellStateField states, double t0) {
  if (states.size() != mesh_.n_cells())
    throw std::runtime_error("simulation: state size does not match the mesh");
  state_.states = std::move(states);
  state_.t = t0;
  state_.step = 0;
  state_.diag = diagnostics(state_.states);
}

Diagnostics Simulation::diagnostics(const CellStateField& s) const {
  Diagnostics d;
  d.min_depth = std::numeric_limits<double>::max();
  for (int c = 0; c < mesh_.n_cells(); ++c) {
    const double h = s.w[c] - bathy_.cell_value(c);
    d.mass += h * mesh_.geometry(c).area;
    d.min_depth = std::min(d.min_depth, h);
    const auto [u, v] = desingularized_velocity(h, s.qx[c], s.qy[c], eps_, params_.eta);
    d.max_speed = std::max(d.max_speed, std::hypot(u, v));
  }
  return d;
}

void Simulation::prepare() {
  ghosts_ = compute_ghost_cell_means(mesh_, bathy_, state_.states, bc_by_tag_);
  recon_ = reconstruct(mesh_, bathy_, state_.states, &ghosts_, eps_, params_.eta);

  boundary_outer_.resize(mesh_.boundary_edges().size());
  for (std::size_t i = 0; i < mesh_.boundary_edges().size(); ++i) {
    const BoundaryEdgeRef& be = mesh_.boundary_edges()[i];
    const EdgeGeometry& e = mesh_.geometry(be.cell).edge[be.k];
    boundary_outer_[i] =
        ghost_state(recon_.inner[be.cell][be.k], bc_by_tag_[be.tag], e.nx, e.ny, state_.t,
                    bathy_.interface_value(be.cell, be.k), eps_, params_.eta);
  }

  speeds_.assign(mesh_.n_cells(), {});
  for (const MeshEdge& me : mesh_.edges()) {
    const EdgeGeometry& e = mesh_.geometry(me.cell_in).edge[me.k_in];
    const InterfaceState& in = recon_.inner[me.cell_in][me.k_in];
    const InterfaceState& out = me.cell_out >= 0 ? recon_.inner[me.cell_out][me.k_out]
                                                 : boundary_outer_[e.boundary_slot];
    const LocalSpeeds s = local_speeds(in, out, e.nx, e.ny, params_.g);
    speeds_[me.cell_in][me.k_in] = s;
    if (me.cell_out >= 0) speeds_[me.cell_out][me.k_out] = {s.out, s.in};
  }
}

double Simulation::stable_dt() {
  prepare();
  return compute_dt(mesh_, speeds_, params_.cfl, params_.dt_max);
}

void Simulation::apply(double dt) {
  const SourceTerms src =
      compute_sources(mesh_, bathy_, state_.states, recon_, params_.g, params_.n_manning, eps_);

  // Flux divergence, accumulated per cell; each interior edge evaluated once.
  std::vector<std::array<double, 3>> acc(mesh_.n_cells(), {0.0, 0.0, 0.0});
  for (const MeshEdge& me : mesh_.edges()) {
    const EdgeGeometry& e = mesh_.geometry(me.cell_in).edge[me.k_in];
    const InterfaceState& in = recon_.inner[me.cell_in][me.k_in];
    const InterfaceState& out = me.cell_out >= 0 ? recon_.inner[me.cell_out][me.k_out]
                                                 : boundary_outer_[e.boundary_slot];
    const auto a =
        central_upwind_flux(in, out, speeds_[me.cell_in][me.k_in], e.nx, e.ny, params_.g);
    for (int i = 0; i < 3; ++i) {
      const double contrib = e.length * a[i];
      acc[me.cell_in][i] += contrib;
      if (me.cell_out >= 0) acc[me.cell_out][i] -= contrib;
    }
  }

  CellStateField next = state_.states;
  for (int c = 0; c < mesh_.n_cells(); ++c) {
    const double inv_area = 1.0 / mesh_.geometry(c).area;
    const double pi_w = acc[c][0] * inv_area;
    const double pi_qx = acc[c][1] * inv_area;
    const double pi_qy = acc[c][2] * inv_area;

    double w = state_.states.w[c] + dt * pi_w;
    const double qx =
        semi_implicit_discharge_update(state_.states.qx[c], dt, src.phi[c], pi_qx, src.sx[c]);
    const double qy =
        semi_implicit_discharge_update(state_.states.qy[c], dt, src.phi[c], pi_qy, src.sy[c]);

    const double h = w - bathy_.cell_value(c);
    if (h < 0.0) {
      if (h < -1e-14)
        throw std::runtime_error("simulation: negative depth " + std::to_string(h) + " in cell " +
                                 std::to_string(c) + " at t = " + std::to_string(state_.t));
      w = bathy_.cell_value(c);  // roundoff-size deficit: snap to dry
    }
    if (!std::isfinite(w) || !std::isfinite(qx) || !std::isfinite(qy))
      throw std::runtime_error("simulation: non-finite state in cell " + std::to_string(c) +
                               " at t = " + std::to_string(state_.t));
    next.w[c] = w;
    next.qx[c] = qx;
    next.qy[c] = qy;
  }
  state_.states = std::move(next);
  state_.step += 1;
  state_.diag = diagnostics(state_.states);
}

void Simulation::advance(double dt) {
  prepare();
  apply(dt);
  state_.t += dt;
}

RunStats Simulation::run(double t_end, const std::vector<Observer*>& observers) {
  const auto t_start = std::chrono::steady_clock::now();
  RunStats stats;
  stats.mass_initial = state_.diag.mass;
  stats.min_depth = state_.diag.min_depth;

  for (Observer* obs : observers) obs->sample(state_);

  while (state_.t < t_end) {
    if (state_.step >= params_.max_steps)
      throw std::runtime_error("simulation: step limit reached at t = " + std::to_string(state_.t));

    prepare();
    double dt = compute_dt(mesh_, speeds_, params_.cfl, params_.dt_max);

    // Land exactly on the nearest event (observer sample or t_end).
    double target = t_end;
    for (const Observer* obs : observers) target = std::min(target, obs->next_time());
    if (target <= state_.t)
      throw std::runtime_error("simulation: observer sample time does not advance");
    bool landed = false;
    if (state_.t + dt >= target) {
      dt = target - state_.t;
      landed = true;
    }
    apply(dt);
    state_.t = landed ? target : state_.t + dt;

    for (Observer* obs : observers) obs->sample(state_);
    stats.min_depth = std::min(stats.min_depth, state_.diag.min_depth);
    stats.max_speed = std::max(stats.max_speed, state_.diag.max_speed);
  }

  stats.steps = state_.step;
  stats.t_end = state_.t;
  stats.mass_final = state_.diag.mass;
  stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return stats;
}

}  // namespace swe
