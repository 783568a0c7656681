#pragma once

#include <limits>
#include <vector>

#include "swe2d/boundary.hpp"
#include "swe2d/flux.hpp"
#include "swe2d/sources.hpp"

namespace swe {

struct SchemeParams {
  double g = 9.81;
  double n_manning = 0.0;
  double cfl = 0.25;       ///< fraction of the inradius-based stability limit
  double dt_max = 1.0;     ///< time-step cap, also used when nothing moves
  double eta = 1e-6;       ///< dry tolerance for velocities and wet/dry tests
  long max_steps = 50'000'000;
};

struct Diagnostics {
  double mass = 0.0;       ///< total water volume
  double min_depth = 0.0;  ///< smallest cell-mean depth
  double max_speed = 0.0;  ///< largest cell-mean velocity magnitude
};

struct SimState {
  double t = 0.0;
  long step = 0;
  CellStateField states;
  Diagnostics diag;
};

/// Receives the state at t = 0 and after every step. `next_time()` announces the
/// next instant this observer must see exactly; the time loop shortens steps to land
/// on it. Implementations decide internally whether a call is worth recording.
class Observer {
public:
  virtual ~Observer() = default;
  virtual double next_time() const { return std::numeric_limits<double>::infinity(); }
  virtual void sample(const SimState& state) = 0;
};

/// CFL time step cfl * min_j(inradius_j / a_j) with a_j the largest one-sided speed
/// over the cell's edges; returns dt_max when no cell sees a positive speed.
double compute_dt(const Mesh& mesh, const std::vector<std::array<LocalSpeeds, 3>>& speeds,
                  double cfl, double dt_max);

struct RunStats {
  long steps = 0;
  double t_end = 0.0;
  double mass_initial = 0.0;
  double mass_final = 0.0;
  double min_depth = 0.0;   ///< smallest mean depth seen at any accepted step
  double max_speed = 0.0;
  double wall_seconds = 0.0;
};

/// Forward-Euler central-upwind solver. One step is: mirror states for the boundary
/// gradient stencils -> reconstruction -> exterior interface states -> one-sided
/// speeds -> time step -> edge fluxes (each interior edge once, applied with
/// opposite signs) -> bed-slope and friction sources -> semi-implicit update.
/// Throws on non-finite results or on a mean depth below -1e-14 (roundoff-size
/// negatives are clipped to dry). Single-threaded and deterministic: identical
/// inputs produce identical states.
class Simulation {
public:
  /// `bcs` must provide a condition for every boundary tag of the mesh.
  Simulation(const Mesh& mesh, const BathymetryField& bathy, SchemeParams params,
             const BoundaryMap& bcs);

  void set_state(CellStateField states, double t0 = 0.0);
  const SimState& state() const { return state_; }
  const Mesh& mesh() const { return mesh_; }
  const BathymetryField& bathymetry() const { return bathy_; }
  const SchemeParams& params() const { return params_; }
  /// Desingularization constant shared by velocities and friction: max_j |T_j|^2.
  double eps() const { return eps_; }

  /// Stability step from a fresh reconstruction of the current state.
  double stable_dt();
  /// One explicit step with a caller-chosen dt.
  void advance(double dt);
  /// Advance to t_end, landing exactly on t_end and on observer sample times.
  RunStats run(double t_end, const std::vector<Observer*>& observers = {});

private:
  void prepare();
  void apply(double dt);
  Diagnostics diagnostics(const CellStateField& s) const;

  const Mesh& mesh_;
  const BathymetryField& bathy_;
  SchemeParams params_;
  std::vector<BoundaryCondition> bc_by_tag_;
  double eps_;
  SimState state_;

  // per-step workspace
  GhostCellMeans ghosts_;
  Reconstruction recon_;
  std::vector<InterfaceState> boundary_outer_;
  std::vector<std::array<LocalSpeeds, 3>> speeds_;
};

}  // namespace swe
