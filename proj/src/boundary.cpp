#include "swe2d/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace swe {

ForcingSeries::ForcingSeries(std::vector<double> t, std::vector<double> w,
                             std::vector<double> u, std::vector<double> v)
    : t_(std::move(t)), w_(std::move(w)), u_(std::move(u)), v_(std::move(v)) {
  if (t_.empty() || t_.size() != w_.size() || t_.size() != u_.size() || t_.size() != v_.size())
    throw std::runtime_error("forcing series: empty or mismatched columns");
  for (std::size_t i = 1; i < t_.size(); ++i)
    if (!(t_[i] > t_[i - 1]))
      throw std::runtime_error("forcing series: time samples must be strictly increasing");
}

ForcingSeries ForcingSeries::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("forcing series: cannot open '" + path + "'");
  std::vector<double> t, w, u, v;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream s(line);
    double tv, wv, uv, vv;
    if (!(s >> tv >> wv >> uv >> vv)) {
      if (lineno == 1) continue;  // header row
      throw std::runtime_error("forcing series: '" + path + "' line " + std::to_string(lineno) +
                               ": expected 't,w,u,v'");
    }
    t.push_back(tv);
    w.push_back(wv);
    u.push_back(uv);
    v.push_back(vv);
  }
  return ForcingSeries(std::move(t), std::move(w), std::move(u), std::move(v));
}

ForcingPoint ForcingSeries::at(double t) const {
  if (t <= t_.front()) return {w_.front(), u_.front(), v_.front()};
  if (t >= t_.back()) return {w_.back(), u_.back(), v_.back()};
  const auto it = std::upper_bound(t_.begin(), t_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - t_.begin());
  const double a = (t - t_[i - 1]) / (t_[i] - t_[i - 1]);
  return {w_[i - 1] + a * (w_[i] - w_[i - 1]), u_[i - 1] + a * (u_[i] - u_[i - 1]),
          v_[i - 1] + a * (v_[i] - v_[i - 1])};
}

InterfaceState ghost_state(const InterfaceState& inner, const BoundaryCondition& bc, double nx,
                           double ny, double t, double b_edge, double eps, double eta) {
  switch (bc.kind) {
    case BoundaryCondition::Kind::wall: {
      InterfaceState s = inner;
      const double qn = inner.qx * nx + inner.qy * ny;
      s.qx = inner.qx - 2.0 * qn * nx;
      s.qy = inner.qy - 2.0 * qn * ny;
      const double un = inner.u * nx + inner.v * ny;
      s.u = inner.u - 2.0 * un * nx;
      s.v = inner.v - 2.0 * un * ny;
      return s;
    }
    case BoundaryCondition::Kind::outflow:
      return inner;
    case BoundaryCondition::Kind::inflow_series:
    case BoundaryCondition::Kind::inflow_analytic: {
      const ForcingPoint f = bc.kind == BoundaryCondition::Kind::inflow_series
                                 ? bc.series.at(t)
                                 : bc.analytic(t);
      InterfaceState s;
      s.h = std::max(0.0, f.w - b_edge);
      s.w = s.h + b_edge;
      s.qx = s.h * f.u;
      s.qy = s.h * f.v;
      const auto [u, v] = desingularized_velocity(s.h, s.qx, s.qy, eps, eta);
      s.u = u;
      s.v = v;
      return s;
    }
  }
  return inner;  // unreachable
}

GhostCellMeans compute_ghost_cell_means(const Mesh& mesh, const BathymetryField& bathy,
                                        const CellStateField& states,
                                        const std::vector<BoundaryCondition>& bc_by_tag) {
  GhostCellMeans ghosts;
  ghosts.entries.resize(mesh.boundary_edges().size());
  for (std::size_t i = 0; i < mesh.boundary_edges().size(); ++i) {
    const BoundaryEdgeRef& be = mesh.boundary_edges()[i];
    const CellGeometry& g = mesh.geometry(be.cell);
    const auto& cell = mesh.cell(be.cell);
    const Vertex& p = mesh.vertex(cell[be.k]);
    const Vertex& q = mesh.vertex(cell[(be.k + 1) % 3]);

    // Reflect the centroid across the edge line.
    const double ex = q.x - p.x, ey = q.y - p.y;
    const double len2 = ex * ex + ey * ey;
    const double proj = ((g.cx - p.x) * ex + (g.cy - p.y) * ey) / len2;
    const double fx = p.x + proj * ex, fy = p.y + proj * ey;  // foot of the centroid
    GhostCellMeans::Entry& e = ghosts.entries[i];
    e.cx = 2.0 * fx - g.cx;
    e.cy = 2.0 * fy - g.cy;

    const BoundaryCondition& bc = bc_by_tag[be.tag];
    if (bc.kind == BoundaryCondition::Kind::wall) {
      e.w = states.w[be.cell];
      const EdgeGeometry& eg = g.edge[be.k];
      const double qn = states.qx[be.cell] * eg.nx + states.qy[be.cell] * eg.ny;
      e.qx = states.qx[be.cell] - 2.0 * qn * eg.nx;
      e.qy = states.qy[be.cell] - 2.0 * qn * eg.ny;
    } else {
      // Continue the bottom with the cell's own slope so that surfaces that are
      // planar inside the cell extrapolate exactly.
      const double db = bathy.grad_x(be.cell) * (e.cx - g.cx) + bathy.grad_y(be.cell) * (e.cy - g.cy);
      e.w = states.w[be.cell] + db;
      e.qx = states.qx[be.cell];
      e.qy = states.qy[be.cell];
    }
  }
  return ghosts;
}

}  // namespace swe
