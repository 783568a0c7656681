#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "swe2d/reconstruction.hpp"

namespace swe {

/// Prescribed boundary signal: absolute free surface w and velocity (u, v).
struct ForcingPoint {
  double w = 0.0;
  double u = 0.0;
  double v = 0.0;
};

/// Tabulated forcing, linearly interpolated and clamped to the first/last sample
/// outside the covered time range.
class ForcingSeries {
public:
  ForcingSeries() = default;
  ForcingSeries(std::vector<double> t, std::vector<double> w, std::vector<double> u,
                std::vector<double> v);

  /// CSV with header "t,w,u,v" (or the same four columns without a header).
  static ForcingSeries from_csv(const std::string& path);

  ForcingPoint at(double t) const;
  bool empty() const { return t_.empty(); }
  double t_front() const { return t_.front(); }
  double t_back() const { return t_.back(); }

private:
  std::vector<double> t_, w_, u_, v_;
};

struct BoundaryCondition {
  enum class Kind { wall, outflow, inflow_series, inflow_analytic };
  Kind kind = Kind::wall;
  ForcingSeries series;                           // inflow_series
  std::function<ForcingPoint(double)> analytic;   // inflow_analytic

  static BoundaryCondition make_wall() { return {Kind::wall, {}, {}}; }
  static BoundaryCondition make_outflow() { return {Kind::outflow, {}, {}}; }
  static BoundaryCondition make_inflow(ForcingSeries s) {
    return {Kind::inflow_series, std::move(s), {}};
  }
  static BoundaryCondition make_inflow(std::function<ForcingPoint(double)> f) {
    return {Kind::inflow_analytic, {}, std::move(f)};
  }
};

/// Boundary conditions keyed by boundary tag label.
using BoundaryMap = std::map<std::string, BoundaryCondition>;

/// Exterior interface state at a boundary edge midpoint:
///  - wall:    same surface and depth, normal velocity reflected, tangential kept;
///  - outflow: copy of the interior state;
///  - inflow:  depth from the prescribed surface and the local bottom (clipped at
///             dry), discharge from the prescribed velocity.
/// (nx, ny) is the outward unit normal, b_edge the bottom at the edge midpoint.
InterfaceState ghost_state(const InterfaceState& inner, const BoundaryCondition& bc, double nx,
                           double ny, double t, double b_edge, double eps, double eta = 1e-6);

/// Mirror-cell means used to complete boundary gradient stencils, one entry per mesh
/// boundary edge. The mirror centroid is the reflection of the cell centroid across
/// the edge. Walls reflect the state (surface kept, normal discharge negated);
/// open boundaries copy the depth and discharge and continue the bottom with the
/// cell's own linear slope so a planar surface extends exactly.
GhostCellMeans compute_ghost_cell_means(const Mesh& mesh, const BathymetryField& bathy,
                                        const CellStateField& states,
                                        const std::vector<BoundaryCondition>& bc_by_tag);

}  // namespace swe
