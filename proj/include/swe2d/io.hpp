#pragma once

#include <string>
#include <vector>

#include "swe2d/bathymetry.hpp"
#include "swe2d/reconstruction.hpp"

namespace swe {

struct GaugeRow {
  double t = 0.0, w = 0.0, h = 0.0, u = 0.0, v = 0.0;
};

/// CSV "t,w,h,u,v". Values are printed with 17 significant digits so parsing the
/// file back recovers the doubles exactly.
void write_gauge_csv(const std::string& path, const std::vector<GaugeRow>& rows);

/// CSV "cell_id,x,y,B,w,h,qx,qy" with one row per cell (centroid coordinates,
/// cell-mean values), 17 significant digits.
void write_snapshot_csv(const std::string& path, const Mesh& mesh, const BathymetryField& bathy,
                        const CellStateField& states);

/// Legacy ASCII VTK unstructured grid with cell data B, w, h, qx, qy.
void write_snapshot_vtk(const std::string& path, const Mesh& mesh, const BathymetryField& bathy,
                        const CellStateField& states);

/// Creates the directory (and parents) if needed; throws on failure.
void ensure_directory(const std::string& path);

}  // namespace swe
