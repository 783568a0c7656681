#pragma once

#include <utility>
#include <vector>

#include "swe2d/reconstruction.hpp"

namespace swe {

/// Bed-slope source for one cell's momentum equations, discretized so that it
/// cancels the pressure part of the flux divergence exactly on steady states:
///   S_x = g/(2|T|) * sum_k d_k * nx_k * (B_k - w_k)^2  +  g * w_x * (B_cell - w_mean)
/// and the analogous expression with ny_k / w_y for S_y. `w_face` are the cell's own
/// corrected interface surfaces, (w_x, w_y) its limited surface gradient.
std::pair<double, double> bed_slope_source(const CellGeometry& geom,
                                           const std::array<double, 3>& b_face,
                                           const std::array<double, 3>& w_face, double w_grad_x,
                                           double w_grad_y, double b_cell, double w_mean,
                                           double g);

/// Semi-implicit friction coefficient Phi (Manning law), desingularized in the same
/// spirit as the velocity: g*n^2*h^(5/3)*|q| / (h^4 + max(h^4, eps)). For h^4 >= eps
/// this is exactly (g*n^2/2)*|q|/h^(7/3); in the dry limit it vanishes.
double friction_phi(double h, double qx, double qy, double g, double n_manning, double eps);

/// One forward-Euler update of a discharge component with friction treated
/// semi-implicitly (the friction force uses the average of the old and new
/// discharge):
///   q_new = (q_old*(1 - dt*phi) + dt*flux_div + dt*bed_source) / (1 + dt*phi).
/// Monotone in |q| when flux_div and bed_source vanish.
double semi_implicit_discharge_update(double q_old, double dt, double phi, double flux_div,
                                      double bed_source);

/// Per-cell source data for one step.
struct SourceTerms {
  std::vector<double> sx, sy;  ///< bed-slope source for qx, qy
  std::vector<double> phi;     ///< friction coefficient
};

SourceTerms compute_sources(const Mesh& mesh, const BathymetryField& bathy,
                            const CellStateField& states, const Reconstruction& rec, double g,
                            double n_manning, double eps);

}  // namespace swe
