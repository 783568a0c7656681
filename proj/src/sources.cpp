#include "swe2d/sources.hpp"

#include <algorithm>
#include <cmath>

namespace swe {

std::pair<double, double> bed_slope_source(const CellGeometry& geom,
                                           const std::array<double, 3>& b_face,
                                           const std::array<double, 3>& w_face, double w_grad_x,
                                           double w_grad_y, double b_cell, double w_mean,
                                           double g) {
  double sum_x = 0.0, sum_y = 0.0;
  for (int k = 0; k < 3; ++k) {
    const EdgeGeometry& e = geom.edge[k];
    const double db = b_face[k] - w_face[k];
    sum_x += e.length * e.nx * db * db;
    sum_y += e.length * e.ny * db * db;
  }
  const double half_g_over_area = 0.5 * g / geom.area;
  const double db_mean = b_cell - w_mean;
  return {half_g_over_area * sum_x + g * w_grad_x * db_mean,
          half_g_over_area * sum_y + g * w_grad_y * db_mean};
}

double friction_phi(double h, double qx, double qy, double g, double n_manning, double eps) {
  if (h <= 0.0) return 0.0;
  const double q_norm = std::hypot(qx, qy);
  const double h4 = h * h * h * h;
  return g * n_manning * n_manning * std::pow(h, 5.0 / 3.0) * q_norm /
         (h4 + std::max(h4, eps));
}

double semi_implicit_discharge_update(double q_old, double dt, double phi, double flux_div,
                                      double bed_source) {
  return (q_old * (1.0 - dt * phi) + dt * flux_div + dt * bed_source) / (1.0 + dt * phi);
}

SourceTerms compute_sources(const Mesh& mesh, const BathymetryField& bathy,
                            const CellStateField& states, const Reconstruction& rec, double g,
                            double n_manning, double eps) {
  const int nc = mesh.n_cells();
  SourceTerms src;
  src.sx.resize(nc);
  src.sy.resize(nc);
  src.phi.resize(nc);
  for (int c = 0; c < nc; ++c) {
    const std::array<double, 3> b_face{bathy.interface_value(c, 0), bathy.interface_value(c, 1),
                                       bathy.interface_value(c, 2)};
    const std::array<double, 3> w_face{rec.inner[c][0].w, rec.inner[c][1].w, rec.inner[c][2].w};
    const auto [sx, sy] =
        bed_slope_source(mesh.geometry(c), b_face, w_face, rec.gradients.wx(c),
                         rec.gradients.wy(c), bathy.cell_value(c), states.w[c], g);
    src.sx[c] = sx;
    src.sy[c] = sy;
    const double h = states.w[c] - bathy.cell_value(c);
    src.phi[c] = friction_phi(h, states.qx[c], states.qy[c], g, n_manning, eps);
  }
  return src;
}

}  // namespace swe
