#pragma once

#include <array>
#include <utility>
#include <vector>

#include "swe2d/bathymetry.hpp"
#include "swe2d/mesh.hpp"

namespace swe {

/// Cell means of the conservative variables: free surface w = B + h and the
/// discharges qx = h*u, qy = h*v.
struct CellStateField {
  std::vector<double> w, qx, qy;

  static CellStateField zeros(int n) {
    CellStateField f;
    f.w.assign(n, 0.0);
    f.qx.assign(n, 0.0);
    f.qy.assign(n, 0.0);
    return f;
  }
  int size() const { return static_cast<int>(w.size()); }
};

/// Limited gradient of each conservative variable, per cell.
struct GradientField {
  // layout per cell: [w_x, w_y, qx_x, qx_y, qy_x, qy_y]
  std::vector<std::array<double, 6>> g;

  double wx(int c) const { return g[c][0]; }
  double wy(int c) const { return g[c][1]; }
};

/// Reconstructed one-sided state at an edge midpoint. h is already clipped
/// nonnegative and (u, v) are desingularized velocities.
struct InterfaceState {
  double w = 0.0, h = 0.0;
  double qx = 0.0, qy = 0.0;
  double u = 0.0, v = 0.0;
};

struct Reconstruction {
  GradientField gradients;
  /// inner[c][k]: cell c's own reconstructed value at the midpoint of its edge k.
  std::vector<std::array<InterfaceState, 3>> inner;
};

/// Mirror-cell states used to complete the three-point gradient stencils of cells
/// that touch the boundary. One entry per mesh boundary edge (same indexing as
/// Mesh::boundary_edges()); the state is placed at the reflection of the cell
/// centroid across the boundary edge.
struct GhostCellMeans {
  struct Entry {
    double cx = 0.0, cy = 0.0;
    double w = 0.0, qx = 0.0, qy = 0.0;
  };
  std::vector<Entry> entries;
};

/// Gradient of the plane through three points (xi, yi, ui). Returns (0, 0) and sets
/// *degenerate when the points are (numerically) collinear.
std::pair<double, double> plane_gradient(double x1, double y1, double u1, double x2, double y2,
                                         double u2, double x3, double y3, double u3,
                                         bool* degenerate = nullptr);

/// Nonlinear blend of three stencil gradients. Weights favor the flatter planes so
/// one outlier gradient cannot dominate; they are built from squared norms with the
/// regularization constant 1e-7 and reproduce the common gradient exactly when all
/// three inputs agree.
std::pair<double, double> weighted_gradient(std::pair<double, double> g1,
                                            std::pair<double, double> g2,
                                            std::pair<double, double> g3);

/// Enforces w >= B at the cell's vertices while preserving the cell-mean depth:
/// flooded vertices keep a shared depth 3*h_mean/n_plus, dry vertices are snapped to
/// the bottom. Returns the inputs unchanged when no vertex violates w >= B.
/// Throws if every vertex violates while h_mean is positive (impossible for means
/// consistent with the vertex values).
std::array<double, 3> positivity_correct(const std::array<double, 3>& w_vertex,
                                         const std::array<double, 3>& b_vertex, double h_mean);

/// Velocity from depth and discharge: q/h where that is safe (h >= eta and
/// h^4 >= eps, where it coincides with the bounded formula), and the desingularized
/// form sqrt(2)*h*q / sqrt(h^4 + max(h^4, eps)) for thinner layers, which vanishes
/// smoothly with the depth instead of amplifying roundoff-size discharges.
std::pair<double, double> desingularized_velocity(double h, double qx, double qy, double eps,
                                                  double eta = 1e-6);

/// Piecewise-linear reconstruction of (w, qx, qy) with the positivity correction
/// applied to the free surface.
///
/// Gradients: each cell's base gradient is the plane through the centroids of its
/// three face neighbors; the limited gradient blends the base gradients of those
/// neighbors with weighted_gradient(). Boundary cells use `ghosts` (mirror states at
/// reflected centroids) to complete their stencils, and stand in for the missing
/// neighbor with their own base gradient in the blending stage. When `ghosts` is
/// null, cells touching the boundary fall back to a zero gradient.
///
/// Interface values: the corrected vertex surfaces are averaged per edge (the exact
/// midpoint value of the corrected plane), so interface depths are nonnegative by
/// construction; discharges are evaluated at the midpoints directly.
Reconstruction reconstruct(const Mesh& mesh, const BathymetryField& bathy,
                           const CellStateField& states, const GhostCellMeans* ghosts,
                           double eps, double eta = 1e-6);

}  // namespace swe
