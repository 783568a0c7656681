#pragma once

#include <functional>
#include <vector>

#include "swe2d/mesh.hpp"

namespace swe {

/// Continuous piecewise-linear bottom elevation built from vertex values.
///
/// Derived quantities follow the vertex-based discretization used by the scheme:
///   B_jk (edge midpoint) = mean of the edge's two vertex values,
///   B_j  (cell)          = mean of the cell's three vertex values.
/// Because both sides of an interior edge average the same vertex pair, interface
/// values agree across cells bitwise, which the well-balanced source relies on.
class BathymetryField {
public:
  static BathymetryField from_vertex_values(const Mesh& mesh, std::vector<double> vertex_b);
  static BathymetryField sample(const Mesh& mesh, const std::function<double(double, double)>& b);

  double vertex_value(int v) const { return vertex_[v]; }
  double interface_value(int cell, int k) const { return edge_[cell][k]; }  ///< B_jk
  double cell_value(int cell) const { return cell_[cell]; }                 ///< B_j
  /// Exact gradient of the linear interpolant inside the cell (from vertex values).
  double grad_x(int cell) const { return grad_[cell][0]; }
  double grad_y(int cell) const { return grad_[cell][1]; }

  double max_value() const { return max_; }
  const std::vector<double>& vertex_values() const { return vertex_; }

private:
  std::vector<double> vertex_;
  std::vector<std::array<double, 3>> edge_;
  std::vector<double> cell_;
  std::vector<std::array<double, 2>> grad_;
  double max_ = 0.0;
};

}  // namespace swe
