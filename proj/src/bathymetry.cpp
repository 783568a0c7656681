#include "swe2d/bathymetry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace swe {

BathymetryField BathymetryField::from_vertex_values(const Mesh& mesh,
                                                    std::vector<double> vertex_b) {
  if (static_cast<int>(vertex_b.size()) != mesh.n_vertices())
    throw std::runtime_error("bathymetry: vertex value count does not match the mesh");

  BathymetryField f;
  f.vertex_ = std::move(vertex_b);
  f.max_ = -std::numeric_limits<double>::max();
  for (double b : f.vertex_) {
    if (!std::isfinite(b)) throw std::runtime_error("bathymetry: non-finite vertex value");
    f.max_ = std::max(f.max_, b);
  }

  const int nc = mesh.n_cells();
  f.edge_.resize(nc);
  f.cell_.resize(nc);
  f.grad_.resize(nc);
  for (int c = 0; c < nc; ++c) {
    const auto& cell = mesh.cell(c);
    const double b0 = f.vertex_[cell[0]];
    const double b1 = f.vertex_[cell[1]];
    const double b2 = f.vertex_[cell[2]];
    f.cell_[c] = (b0 + b1 + b2) / 3.0;
    f.edge_[c] = {0.5 * (b0 + b1), 0.5 * (b1 + b2), 0.5 * (b2 + b0)};
    const Vertex& v0 = mesh.vertex(cell[0]);
    const Vertex& v1 = mesh.vertex(cell[1]);
    const Vertex& v2 = mesh.vertex(cell[2]);
    const double inv2a = 1.0 / (2.0 * mesh.geometry(c).area);
    f.grad_[c][0] = ((b1 - b0) * (v2.y - v0.y) - (b2 - b0) * (v1.y - v0.y)) * inv2a;
    f.grad_[c][1] = ((b2 - b0) * (v1.x - v0.x) - (b1 - b0) * (v2.x - v0.x)) * inv2a;
  }
  return f;
}

BathymetryField BathymetryField::sample(const Mesh& mesh,
                                        const std::function<double(double, double)>& b) {
  std::vector<double> vb(mesh.n_vertices());
  for (int v = 0; v < mesh.n_vertices(); ++v) {
    vb[v] = b(mesh.vertex(v).x, mesh.vertex(v).y);
    if (!std::isfinite(vb[v]))
      throw std::runtime_error("bathymetry: function evaluated to a non-finite value at vertex " +
                               std::to_string(v));
  }
  return from_vertex_values(mesh, std::move(vb));
}

}  // namespace swe
