#include "swe2d/reconstruction.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace swe {

std::pair<double, double> plane_gradient(double x1, double y1, double u1, double x2, double y2,
                                         double u2, double x3, double y3, double u3,
                                         bool* degenerate) {
  const double ax = x2 - x1, ay = y2 - y1;
  const double bx = x3 - x1, by = y3 - y1;
  const double det = ax * by - bx * ay;
  const double scale = ax * ax + ay * ay + bx * bx + by * by;
  if (degenerate) *degenerate = false;
  if (std::abs(det) <= 1e-14 * scale) {
    if (degenerate) *degenerate = true;
    return {0.0, 0.0};
  }
  const double du1 = u2 - u1, du2 = u3 - u1;
  return {(du1 * by - du2 * ay) / det, (du2 * ax - du1 * bx) / det};
}

std::pair<double, double> weighted_gradient(std::pair<double, double> g1,
                                            std::pair<double, double> g2,
                                            std::pair<double, double> g3) {
  constexpr double xi2 = 1e-7 * 1e-7;
  const double n1 = g1.first * g1.first + g1.second * g1.second;
  const double n2 = g2.first * g2.first + g2.second * g2.second;
  const double n3 = g3.first * g3.first + g3.second * g3.second;
  const double den = n1 * n1 + n2 * n2 + n3 * n3 + 3.0 * xi2;
  const double w1 = (n3 * n2 + xi2) / den;
  const double w2 = (n3 * n1 + xi2) / den;
  const double w3 = (n1 * n2 + xi2) / den;
  return {w1 * g1.first + w2 * g2.first + w3 * g3.first,
          w1 * g1.second + w2 * g2.second + w3 * g3.second};
}

std::array<double, 3> positivity_correct(const std::array<double, 3>& w_vertex,
                                         const std::array<double, 3>& b_vertex, double h_mean) {
  int n_plus = 0;
  for (int k = 0; k < 3; ++k)
    if (w_vertex[k] >= b_vertex[k]) ++n_plus;
  if (n_plus == 3) return w_vertex;
  if (n_plus == 0) {
    // The vertex mean of w - B equals the cell-mean depth, so a positive mean with
    // all three vertices below the bottom cannot occur.
    if (h_mean > 1e-12)
      throw std::runtime_error("positivity correction: all vertices dry in a wet cell");
    return b_vertex;
  }
  const double h_share = 3.0 * h_mean / n_plus;
  std::array<double, 3> out;
  for (int k = 0; k < 3; ++k)
    out[k] = w_vertex[k] >= b_vertex[k] ? b_vertex[k] + h_share : b_vertex[k];
  return out;
}

std::pair<double, double> desingularized_velocity(double h, double qx, double qy, double eps,
                                                  double eta) {
  const double h4 = (h * h) * (h * h);
  // Plain division only where it agrees with the bounded formula (h^4 >= eps makes
  // sqrt(2)h/sqrt(2h^4) = 1/h). Using q/h merely above a fixed film thickness lets
  // thin-layer speeds grow without bound, which stalls the time step.
  if (h >= eta && h4 >= eps) return {qx / h, qy / h};
  const double factor = std::sqrt(2.0) * h / std::sqrt(h4 + std::max(h4, eps));
  return {factor * qx, factor * qy};
}

namespace {

// Stencil point for the base (plane) gradient: a neighbor centroid or a ghost
// mirror state for boundary edges.
struct StencilPoint {
  double x, y;
  double val[3];
};

void gather_stencil(const Mesh& mesh, const CellStateField& states, const GhostCellMeans* ghosts,
                    int c, StencilPoint pts[3], bool* complete) {
  *complete = true;
  const CellGeometry& g = mesh.geometry(c);
  for (int k = 0; k < 3; ++k) {
    const int nb = g.edge[k].neighbor;
    if (nb >= 0) {
      const CellGeometry& ng = mesh.geometry(nb);
      pts[k] = {ng.cx, ng.cy, {states.w[nb], states.qx[nb], states.qy[nb]}};
    } else if (ghosts) {
      const auto& e = ghosts->entries[g.edge[k].boundary_slot];
      pts[k] = {e.cx, e.cy, {e.w, e.qx, e.qy}};
    } else {
      *complete = false;
      return;
    }
  }
}

}  // namespace

Reconstruction reconstruct(const Mesh& mesh, const BathymetryField& bathy,
                           const CellStateField& states, const GhostCellMeans* ghosts,
                           double eps, double eta) {
  const int nc = mesh.n_cells();
  assert(states.size() == nc);
  if (ghosts) assert(ghosts->entries.size() == mesh.boundary_edges().size());

  Reconstruction rec;
  rec.gradients.g.assign(nc, {});
  rec.inner.assign(nc, {});

  // Base gradients: plane through the three stencil centroids, per variable.
  std::vector<std::array<std::pair<double, double>, 3>> base(nc);
  std::vector<char> has_base(nc, 0);
  for (int c = 0; c < nc; ++c) {
    StencilPoint pts[3];
    bool complete = false;
    gather_stencil(mesh, states, ghosts, c, pts, &complete);
    if (!complete) continue;
    has_base[c] = 1;
    for (int i = 0; i < 3; ++i) {
      bool degenerate = false;
      base[c][i] = plane_gradient(pts[0].x, pts[0].y, pts[0].val[i], pts[1].x, pts[1].y,
                                  pts[1].val[i], pts[2].x, pts[2].y, pts[2].val[i], &degenerate);
      if (degenerate) base[c][i] = {0.0, 0.0};
    }
  }

  // Limited gradients: blend the base gradients of the three neighbors; a boundary
  // slot contributes the cell's own base gradient.
  for (int c = 0; c < nc; ++c) {
    if (!has_base[c]) continue;  // zero-gradient fallback stays in place
    const CellGeometry& g = mesh.geometry(c);
    for (int i = 0; i < 3; ++i) {
      std::pair<double, double> s[3];
      bool ok = true;
      for (int k = 0; k < 3; ++k) {
        const int nb = g.edge[k].neighbor;
        const int src = nb >= 0 ? nb : c;
        if (!has_base[src]) {
          ok = false;
          break;
        }
        s[k] = base[src][i];
      }
      if (!ok) continue;
      const auto [gx, gy] = weighted_gradient(s[0], s[1], s[2]);
      rec.gradients.g[c][2 * i] = gx;
      rec.gradients.g[c][2 * i + 1] = gy;
    }
  }

  // Vertex surfaces, positivity correction, midpoint interface states.
  for (int c = 0; c < nc; ++c) {
    const CellGeometry& g = mesh.geometry(c);
    const auto& cell = mesh.cell(c);
    const auto& grad = rec.gradients.g[c];

    std::array<double, 3> wv, bv;
    for (int k = 0; k < 3; ++k) {
      const Vertex& v = mesh.vertex(cell[k]);
      wv[k] = states.w[c] + grad[0] * (v.x - g.cx) + grad[1] * (v.y - g.cy);
      bv[k] = bathy.vertex_value(cell[k]);
    }
    const double h_mean = states.w[c] - bathy.cell_value(c);
    wv = positivity_correct(wv, bv, h_mean);

    for (int k = 0; k < 3; ++k) {
      InterfaceState& s = rec.inner[c][k];
      const EdgeGeometry& e = g.edge[k];
      s.w = 0.5 * (wv[k] + wv[(k + 1) % 3]);
      s.h = s.w - bathy.interface_value(c, k);
      if (s.h < 0.0) s.h = 0.0;  // roundoff-size negatives from the midpoint average
      const double dx = e.mx - g.cx, dy = e.my - g.cy;
      s.qx = states.qx[c] + grad[2] * dx + grad[3] * dy;
      s.qy = states.qy[c] + grad[4] * dx + grad[5] * dy;
      const auto [u, v] = desingularized_velocity(s.h, s.qx, s.qy, eps, eta);
      s.u = u;
      s.v = v;
      // Re-express the discharge through the bounded velocity. Away from dry
      // states this is q again; near them it caps the drain through an interface
      // at depth * speed, which is what keeps cell means nonnegative.
      s.qx = s.h * u;
      s.qy = s.h * v;
    }
  }
  return rec;
}

}  // namespace swe
